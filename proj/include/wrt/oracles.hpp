#pragma once

// Independent reference computations used by the corpus and the tests.

#include "wrt/cartan.hpp"
#include "wrt/fixedpt.hpp"
#include "wrt/modular.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace wrt::oracle {

// sqrt(2/k) sin(pi (a+1)(b+1)/k), a, b = 0 .. k-2
Eigen::MatrixXd su2_s_matrix(int k);
// exp(i pi a (a+2) / (2k))
Eigen::VectorXcd su2_t_diagonal(int k);

// Fixed points of A (x) w found by scanning the grid |det|^{-1} Z^{2n} in [0,1)^{2n}.
std::set<RatVec> brute_force_fixed_points(const SL2& A, const WeylElement& w, const RootSystem& rs,
                                          std::size_t grid_guard = 50'000'000);

struct ShiftDiscrepancy {
    RatVec point;
    std::vector<long long> shift;
    Rational base, shifted; // theta/pi at the two representatives
};

// Adds random lattice vectors (entries in [-5, 5]) to each fixed point and
// compares theta/pi mod 2 exactly.
std::vector<ShiftDiscrepancy> shift_invariance(const SL2& A, const WeylElement& w,
                                               const RootSystem& rs, int shifts,
                                               std::uint64_t seed);

// B(rho, rho) and h^vee dim / 12
std::pair<Rational, Rational> strange_formula(const RootSystem& rs);
// |Lambda^* / Lambda| counted as distinct classes of gram^{-1} v mod Z^n
std::size_t weight_lattice_index(const RootSystem& rs);

} // namespace wrt::oracle
