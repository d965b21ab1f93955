#pragma once

#include "wrt/cartan.hpp"

#include <vector>

namespace wrt {

struct WeightIndex {
    RatVec lambda;          // alcove point (m + rho)/k in coroot coordinates
    int level = 0;
    IntVec admissible_form; // Dynkin labels m of the admissible weight k*lambda - rho
};

std::vector<WeightIndex> admissible_weights(const RootSystem& rs, int k);
std::vector<RatVec> alcove_points(const RootSystem& rs, int k);

// Weight with the given Dynkin labels, in coroot coordinates.
RatVec weight_from_labels(const RootSystem& rs, const IntVec& m);

} // namespace wrt
