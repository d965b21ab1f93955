#pragma once

#include "wrt/exact.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wrt {

enum class Family { A, B, C, D, E, F, G };

struct WeylElement {
    IntMatrix matrix; // action on coroot coordinates
    int sign = 1;     // (-1)^length
};

// Root datum of a compact simple Lie algebra in coroot coordinates, so that
// the coroot lattice is Z^n.  The invariant form is the basic one: even on
// the coroot lattice, short coroots (dual to long roots) of squared length 2.
struct RootSystem {
    Family family = Family::A;
    int rank = 0;

    IntMatrix cartan_matrix; // entry (i,j) = alpha_j(alpha_i^vee)
    IntMatrix gram;          // B(alpha_i^vee, alpha_j^vee)
    RatMatrix weight_basis;  // row i = i-th fundamental weight
    RatVec rho;
    RatVec highest_root;     // covector: x -> alpha_0(x)
    int dual_coxeter = 0;
    int dim_g = 0;
    int num_pos_roots = 0;
    Rational vol_sq;

    IntVec symmetrizer;  // d_i = B(alpha_i^vee, alpha_i^vee) / 2
    IntVec comarks;      // alpha_0^vee in coroot coordinates
    long long gram_det = 0;
    IntMatrix gram_adjugate; // gram_det * gram^{-1}, integral
    std::vector<IntVec> positive_roots; // in simple root coordinates

    std::string name() const;
};

RootSystem build_root_system(Family family, int rank);
// Case-insensitive parser for "A1", "b2", "E6", ...
RootSystem parse_group(const std::string& text);

constexpr std::size_t default_weyl_guard = 10000;
// |W| from the classification, without enumerating the group.
Integer weyl_group_order(const RootSystem& rs);
std::vector<WeylElement> weyl_elements(const RootSystem& rs,
                                       std::size_t guard = default_weyl_guard);

Rational pairing(const RootSystem& rs, const RatVec& x, const RatVec& y);
// alpha_i(x) for x in coroot coordinates
Rational simple_root_value(const RootSystem& rs, int i, const RatVec& x);
Rational highest_root_value(const RootSystem& rs, const RatVec& x);

} // namespace wrt
