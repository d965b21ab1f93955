#pragma once

#include "wrt/cartan.hpp"
#include "wrt/exact.hpp"
#include "wrt/modular.hpp"

#include <vector>

namespace wrt {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
    BigMatrix U, D, V;
    std::vector<Integer> diagonal;
};

SmithForm smith_normal_form(const BigMatrix& m);

struct TorusPoint {
    RatVec coords; // (p, q) in coroot coordinates, reduced into [0,1)
};

struct FixedPointDatum {
    TorusPoint point;
    std::vector<Integer> gamma_mu; // (A (x) w) x - x
    Rational theta_over_pi;
    WeylElement weyl;
};

// [[a w, b w], [c w, d w]]
IntMatrix tensor_matrix(const SL2& A, const WeylElement& w);

std::vector<FixedPointDatum> fixed_points(const SL2& A, const WeylElement& w, const RootSystem& rs);

// theta/pi = B(mu,p) - B(gamma,q) + B(gamma,mu) at the stored representative
Rational cs_phase(const FixedPointDatum& d, const RootSystem& rs);
// Same quantity for an arbitrary representative x of a fixed point.
Rational cs_phase_at(const RatVec& x, const SL2& A, const WeylElement& w, const RootSystem& rs);

Integer fixed_point_count(const SL2& A, const WeylElement& w, const RootSystem& rs);
double det_factor(const SL2& A, const WeylElement& w, const RootSystem& rs);

// exp(i k theta) from theta/pi, reduced mod 2 exactly
cd cs_exponential(const Rational& theta_over_pi, long long k);

} // namespace wrt
