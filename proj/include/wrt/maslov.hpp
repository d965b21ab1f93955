#pragma once

#include "wrt/cartan.hpp"
#include "wrt/modular.hpp"

#include <optional>

namespace wrt {

// g = A (x) w when weyl is set, otherwise the bare 2x2 matrix A; z is the
// chosen square root datum and epsilon = 0 iff tr A > 2.
struct SymplecticLift {
    SL2 A;
    std::optional<WeylElement> weyl;
    cd z;
    int epsilon = 0;
};

int epsilon_of(const SL2& A);

// (-c tau + d) (A.tau - conj A.tau) / (tau - conj A.tau)
cd d_of(double a, double b, double c, double d, cd tau);
cd d_of(const SL2& A, cd tau);

// Quadrant rule on arg z in (-pi, pi]. Throws branch_ambiguity within
// 1e-9 of a quadrant boundary.
int index_2d(const SymplecticLift& lift);
int index_from_arg(double arg, int epsilon);

// Index of (A (x) id, sigma) from the tensor splitting; n = rank.
int index_tensor(const SL2& A, const WeylElement& w, cd sigma, const RootSystem& rs, cd tau);
// Same index computed block by block: n copies of A with the principal root of d(A,tau).
int index_tensor_blocks(const SL2& A, cd sigma, int n, cd tau);

// e(tau) ((A tau - conj A tau)/(tau - conj A tau))^{n/2}
cd sigma(const M2Element& x, cd tau);

// Index of the lift of x with tau = i, retried at perturbed tau near
// quadrant boundaries.
int metaplectic_index(const M2Element& x, const RootSystem& rs);

} // namespace wrt
