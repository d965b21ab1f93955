#pragma once

#include "wrt/cartan.hpp"
#include "wrt/modular.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace wrt {

using Vec = std::vector<double>; // coroot coordinates

struct ThetaParams {
    RootSystem rs;
    int k = 1;
    cd tau{0, 1};
    int truncation_radius = 0; // 0 selects required_radius()
};

// Validates rank <= 2 and Im tau > 0, fills the radius when unset.
ThetaParams make_theta_params(const RootSystem& rs, int k, cd tau, int radius = 0);
// Smallest radius R of the lattice box around q with Gaussian tail below 1e-14.
int required_radius(const ThetaParams& p);

// Representatives of k^{-1} Lambda^* modulo Lambda, coordinates in [0,1).
std::vector<Vec> theta_labels(const RootSystem& rs, int k);

double bilinear(const RootSystem& rs, const Vec& x, const Vec& y);
cd bilinear(const RootSystem& rs, const std::vector<cd>& x, const std::vector<cd>& y);

// Theta_{mu,k}(p,q)
cd theta_value(const ThetaParams& P, const Vec& mu, const Vec& p, const Vec& q);
// Theta_{mu,k}(p,q) s(p,q)^k with s = exp(i pi B(p + tau q, q))
cd section_value(const ThetaParams& P, const Vec& mu, const Vec& p, const Vec& q);
// chi_{mu,k} = sum_w (-1)^l(w) Theta_{w mu,k} s^k
cd alternating_value(const ThetaParams& P, const std::vector<WeylElement>& weyl, const Vec& mu,
                     const Vec& p, const Vec& q);

// Gram matrix of the sections Theta_{mu,k} s^k, mu over theta_labels, by
// periodic trapezoid quadrature refined until the relative change is below 1e-8.
struct QuadratureResult {
    Eigen::MatrixXcd gram;
    int points_per_axis = 0;
    double last_change = 0;
};
QuadratureResult section_gram(const ThetaParams& P, int max_points_per_axis = 64);
double section_norm2(const ThetaParams& P, const Vec& mu, int max_points_per_axis = 64);
// (2 pi / k)^{n/2} (2 i pi / (tau - conj tau))^{n/2} Vol
double section_norm2_formula(const RootSystem& rs, int k, cd tau);

// max |chi_mu| over random points; vanishes for mu on an alcove wall
double alternating_sup(const ThetaParams& P, const Vec& mu, int npoints = 50, std::uint64_t seed = 1);

enum class ThetaCheck { S, T, alternating_S };

// max |LHS - RHS| / max |RHS| over random points
double verify_modular_action(const ThetaParams& P, ThetaCheck which, int npoints = 50,
                             std::uint64_t seed = 1);

struct KernelSample {
    Vec p1, q1, p2, q2;
    cd value;
    cd gaussian_model;
};

KernelSample kernel_sample(const RootSystem& rs, int k, cd tau1, cd tau2, const Vec& p1,
                           const Vec& q1, const Vec& p2, const Vec& q2);

// Both sides of the diagonal Poisson identity; returns relative deviation.
struct PoissonCheck {
    cd theta_side;
    cd poisson_side;
    double relative_error = 0;
};
PoissonCheck poisson_check(const RootSystem& rs, int k, cd tau1, cd tau2, const Vec& p1,
                           const Vec& q1, const Vec& p2, const Vec& q2);

struct KernelReport {
    std::vector<int> levels;
    std::vector<double> diagonal_error;  // max |kernel/model - 1| on the diagonal samples
    std::vector<double> off_diagonal;    // |kernel| / (k/2pi)^n at separated points
    std::vector<double> poisson_error;
    std::optional<double> diagonal_slope; // log-log fit above the noise floor
    std::optional<double> decay_rate;     // c in |kernel|/(k/2pi)^n ~ e^{-ck}
    double max_poisson_error = 0;

    // slope <= bound; without a fit, the errors reach the noise floor and stay there
    bool diagonal_decays(double bound = -0.7) const;
};

constexpr double kernel_noise_floor = 1e-12;

KernelReport kernel_check(const RootSystem& rs, const std::vector<int>& levels, cd tau1, cd tau2,
                          int samples = 8, std::uint64_t seed = 1);

} // namespace wrt
