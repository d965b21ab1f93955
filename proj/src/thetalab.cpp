#include "wrt/thetalab.hpp"
#include "wrt/alcove.hpp"
#include "wrt/errors.hpp"
#include "wrt/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace wrt {

namespace {

constexpr double pi = std::numbers::pi;
const cd I(0, 1);

double volume(const RootSystem& rs) { return std::sqrt(double(rs.gram_det)); }

double lambda_min(const RootSystem& rs) {
    Eigen::MatrixXd g(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) g(i, j) = double(rs.gram(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    return es.eigenvalues().minCoeff();
}

template <class X, class Y>
auto bform(const RootSystem& rs, const X& x, const Y& y) {
    decltype(x[0] * y[0]) s{};
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) s += x[i] * double(rs.gram(i, j)) * y[j];
    return s;
}

// Calls f(v) for every v in Z^n with max |v_i - c_i| <= r.
template <class F>
void for_box(const std::vector<long long>& c, int r, F&& f) {
    const std::size_t n = c.size();
    std::vector<long long> v(n);
    std::vector<int> off(n, -r);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) v[i] = c[i] + off[i];
        f(v, off);
        std::size_t i = 0;
        while (i < n && off[i] == r) off[i++] = -r;
        if (i == n) return;
        ++off[i];
    }
}

// Sum of exp(expo(v)) over Z^n by shells of growing radius around c.
// The Gaussian terms are log-concave, so a shell far below the running
// maximum ends the sum.
template <class F>
cd shell_sum(const std::vector<long long>& c, F&& expo) {
    CompensatedSum total;
    double running = 0;
    for (int r = 0; r < 200; ++r) {
        double shell = 0;
        for_box(c, r, [&](const std::vector<long long>& v, const std::vector<int>& off) {
            int linf = 0;
            for (int o : off) linf = std::max(linf, std::abs(o));
            if (linf != r) return;
            cd t = std::exp(expo(v));
            shell = std::max(shell, std::abs(t));
            total.add(t);
        });
        running = std::max(running, shell);
        if (r >= 2 && shell <= 1e-18 * running) return total.value();
    }
    throw Error(ErrorCode::truncation, "lattice sum did not converge");
}

std::vector<long long> rounded(const Vec& x) {
    std::vector<long long> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = std::llround(x[i]);
    return c;
}

Vec to_vec(const RatVec& r) {
    Vec v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = static_cast<double>(r[i]);
    return v;
}

Vec act(const IntMatrix& m, const Vec& x) {
    Vec y(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += double(m(i, j)) * x[j];
    return y;
}

// Sum over gamma in mu + Lambda of exp(expo(gamma)), box of radius R centered at q.
template <class F>
cd theta_box(const ThetaParams& P, const Vec& mu, const Vec& q, F&& expo) {
    const int n = P.rs.rank;
    Vec shift(n);
    for (int i = 0; i < n; ++i) shift[i] = q[i] - mu[i];
    CompensatedSum s;
    Vec g(n);
    for_box(rounded(shift), P.truncation_radius, [&](const std::vector<long long>& l, const auto&) {
        for (int i = 0; i < n; ++i) g[i] = mu[i] + double(l[i]);
        s.add(std::exp(expo(g)));
    });
    return s.value();
}

void check_point(const ThetaParams& P, const Vec& mu, const Vec& p, const Vec& q) {
    const std::size_t n = P.rs.rank;
    if (mu.size() != n || p.size() != n || q.size() != n)
        throw Error(ErrorCode::dimension_mismatch, "theta arguments must have the rank as length");
}

std::vector<Vec> random_points(int npoints, int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Vec> pts;
    for (int t = 0; t < npoints; ++t) {
        Vec x(2 * n);
        for (auto& c : x) c = u(gen);
        pts.push_back(std::move(x));
    }
    return pts;
}

cd half_power(cd z, int n) { return std::exp(0.5 * n * std::log(z)); }

} // namespace

int required_radius(const ThetaParams& p) {
    double a = pi * p.k * p.tau.imag() * lambda_min(p.rs);
    int r = static_cast<int>(std::ceil(std::sqrt(std::log(1e16) / a)));
    return std::max(r, 2);
}

ThetaParams make_theta_params(const RootSystem& rs, int k, cd tau, int radius) {
    if (rs.rank > 2) throw Error(ErrorCode::rank_guard, "theta checks are limited to rank <= 2");
    if (k < 1) throw Error(ErrorCode::invalid_level, "level must be positive");
    if (!(tau.imag() > 0)) throw Error(ErrorCode::invalid_argument, "Im tau must be positive");
    ThetaParams P{rs, k, tau, 0};
    int need = required_radius(P);
    if (radius != 0 && radius < need)
        throw Error(ErrorCode::truncation,
                    "truncation radius " + std::to_string(radius) + " below required " + std::to_string(need));
    P.truncation_radius = radius == 0 ? need : radius;
    return P;
}

std::vector<Vec> theta_labels(const RootSystem& rs, int k) {
    if (rs.rank > 2) throw Error(ErrorCode::rank_guard, "theta checks are limited to rank <= 2");
    if (k < 1) throw Error(ErrorCode::invalid_level, "level must be positive");
    const int n = rs.rank;
    const long long span = k * rs.gram_det;
    std::set<RatVec> seen;
    // k^{-1} Lambda^* = gram^{-1} Z^n / k, and v -> v + k gram Z^n acts trivially
    for_box(std::vector<long long>(n, span / 2), static_cast<int>(span / 2 + 1),
            [&](const std::vector<long long>& v, const auto&) {
                RatVec x(n, Rational(0));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) x[i] += rs.weight_basis(j, i) * Rational(v[j]);
                for (auto& c : x) c = mod_positive(c / Rational(k), 1);
                seen.insert(x);
            });
    std::vector<Vec> out;
    for (const auto& x : seen) out.push_back(to_vec(x));
    const std::size_t expected = static_cast<std::size_t>(std::pow(k, n)) * rs.gram_det;
    if (out.size() != expected)
        throw std::logic_error("label count mismatch");
    return out;
}

double bilinear(const RootSystem& rs, const Vec& x, const Vec& y) { return bform(rs, x, y); }
cd bilinear(const RootSystem& rs, const std::vector<cd>& x, const std::vector<cd>& y) {
    return bform(rs, x, y);
}

cd theta_value(const ThetaParams& P, const Vec& mu, const Vec& p, const Vec& q) {
    check_point(P, mu, p, q);
    const int n = P.rs.rank;
    std::vector<cd> zeta(n);
    for (int i = 0; i < n; ++i) zeta[i] = p[i] + P.tau * q[i];
    return theta_box(P, mu, q, [&](const Vec& g) {
        return 2.0 * pi * I * double(P.k) * (P.tau / 2.0 * bform(P.rs, g, g) - bform(P.rs, zeta, g));
    });
}

cd section_value(const ThetaParams& P, const Vec& mu, const Vec& p, const Vec& q) {
    check_point(P, mu, p, q);
    const int n = P.rs.rank;
    std::vector<cd> zeta(n);
    for (int i = 0; i < n; ++i) zeta[i] = p[i] + P.tau * q[i];
    const cd s_exp = pi * I * double(P.k) * bform(P.rs, zeta, q);
    return theta_box(P, mu, q, [&](const Vec& g) {
        return 2.0 * pi * I * double(P.k) * (P.tau / 2.0 * bform(P.rs, g, g) - bform(P.rs, zeta, g)) +
               s_exp;
    });
}

cd alternating_value(const ThetaParams& P, const std::vector<WeylElement>& weyl, const Vec& mu,
                     const Vec& p, const Vec& q) {
    CompensatedSum s;
    for (const auto& w : weyl) s.add(double(w.sign) * section_value(P, act(w.matrix, mu), p, q));
    return s.value();
}

QuadratureResult section_gram(const ThetaParams& P, int max_points_per_axis) {
    const RootSystem& rs = P.rs;
    const int n = rs.rank;
    const auto labels = theta_labels(rs, P.k);
    const std::size_t L = labels.size();
    const int R = P.truncation_radius;

    // gamma = mu + l; k gram gamma is an integer vector m, and at p = j/N
    // the phase exp(-2 pi i k B(p, gamma)) is exp(-2 pi i j.m / N).
    std::vector<std::vector<long long>> m_mu(L, std::vector<long long>(n));
    for (std::size_t a = 0; a < L; ++a)
        for (int i = 0; i < n; ++i) {
            double v = 0;
            for (int j = 0; j < n; ++j) v += double(rs.gram(i, j)) * labels[a][j];
            m_mu[a][i] = std::llround(v * P.k);
        }

    auto compute = [&](int N) {
        PhaseTable phase(N);
        std::size_t nq = 1;
        for (int i = 0; i < n; ++i) nq *= N;
        std::vector<Eigen::MatrixXcd> partial(nq);
        parallel_for(nq, [&](std::size_t iq) {
            Vec q(n);
            std::size_t t = iq;
            for (int i = 0; i < n; ++i) {
                q[i] = double(t % N) / N;
                t /= N;
            }
            // coefficients c_gamma(q), gamma in the box around q
            struct Term {
                std::size_t label;
                std::vector<long long> m;
                cd c;
            };
            std::vector<Term> terms;
            const cd s_q = pi * I * double(P.k) * P.tau * bform(rs, q, q);
            for (std::size_t a = 0; a < L; ++a) {
                Vec shift(n);
                for (int i = 0; i < n; ++i) shift[i] = q[i] - labels[a][i];
                Vec g(n);
                for_box(rounded(shift), R, [&](const std::vector<long long>& l, const auto&) {
                    for (int i = 0; i < n; ++i) g[i] = labels[a][i] + double(l[i]);
                    cd e = 2.0 * pi * I * double(P.k) *
                               (P.tau / 2.0 * bform(rs, g, g) - P.tau * bform(rs, q, g)) +
                           s_q;
                    std::vector<long long> m = m_mu[a];
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) m[i] += P.k * rs.gram(i, j) * l[j];
                    terms.push_back({a, std::move(m), std::exp(e)});
                });
            }
            Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(L, L);
            Eigen::VectorXcd vals(L);
            std::size_t np = nq;
            for (std::size_t ip = 0; ip < np; ++ip) {
                std::vector<long long> j(n);
                std::size_t u = ip;
                for (int i = 0; i < n; ++i) {
                    j[i] = static_cast<long long>(u % N);
                    u /= N;
                }
                vals.setZero();
                for (const auto& tm : terms) {
                    long long r = 0;
                    for (int i = 0; i < n; ++i) r -= j[i] * tm.m[i];
                    vals(tm.label) += tm.c * phase(r);
                }
                // the p-dependent phase of s^k is common to all sections
                acc.noalias() += vals * vals.adjoint();
            }
            partial[iq] = std::move(acc);
        });
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(L, L);
        for (const auto& m : partial) g += m;
        const double vol = volume(rs);
        const double scale = std::pow(2 * pi, n) * vol * vol / std::pow(double(N), 2 * n);
        // entry (a,b) = <Theta_a, Theta_b>
        return Eigen::MatrixXcd(g.transpose() * scale);
    };

    QuadratureResult res;
    Eigen::MatrixXcd prev = compute(8);
    for (int N = 16; N <= max_points_per_axis; N *= 2) {
        Eigen::MatrixXcd cur = compute(N);
        double scale = cur.diagonal().cwiseAbs().maxCoeff();
        double change = (cur - prev).cwiseAbs().maxCoeff() / scale;
        res.gram = cur;
        res.points_per_axis = N;
        res.last_change = change;
        if (change < 1e-8) return res;
        prev = std::move(cur);
    }
    throw Error(ErrorCode::quadrature, "quadrature did not reach relative change 1e-8 (last " +
                                           std::to_string(res.last_change) + ")");
}

double section_norm2(const ThetaParams& P, const Vec& mu, int max_points_per_axis) {
    const auto labels = theta_labels(P.rs, P.k);
    Vec m(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) m[i] = mu[i] - std::floor(mu[i]);
    std::size_t best = 0;
    double dist = 1e300;
    for (std::size_t a = 0; a < labels.size(); ++a) {
        double d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            double t = std::abs(labels[a][i] - m[i]);
            d += std::min(t, 1 - t);
        }
        if (d < dist) dist = d, best = a;
    }
    if (dist > 1e-9) throw Error(ErrorCode::invalid_argument, "mu is not in k^{-1} Lambda^*");
    return section_gram(P, max_points_per_axis).gram(best, best).real();
}

double section_norm2_formula(const RootSystem& rs, int k, cd tau) {
    const int n = rs.rank;
    cd v = half_power(2.0 * pi / double(k), n) * half_power(2.0 * pi * I / (tau - std::conj(tau)), n) *
           volume(rs);
    return v.real();
}

double verify_modular_action(const ThetaParams& P, ThetaCheck which, int npoints, std::uint64_t seed) {
    if (P.k > 12) throw Error(ErrorCode::size_guard, "modular checks are limited to k <= 12");
    const RootSystem& rs = P.rs;
    const int n = rs.rank;
    const double k = P.k;
    const auto pts = random_points(npoints, n, seed);
    double max_dev = 0, max_rhs = 0;

    if (which == ThetaCheck::T) {
        ThetaParams Q = make_theta_params(rs, P.k, P.tau - 1.0);
        Q.truncation_radius = std::max(Q.truncation_radius, P.truncation_radius);
        for (const auto& mu : theta_labels(rs, P.k))
            for (const auto& x : pts) {
                Vec p(x.begin(), x.begin() + n), q(x.begin() + n, x.end()), pm(n);
                for (int i = 0; i < n; ++i) pm[i] = p[i] - q[i];
                cd lhs = section_value(P, mu, pm, q);
                cd rhs = std::exp(pi * I * k * bform(rs, mu, mu)) * section_value(Q, mu, p, q);
                max_dev = std::max(max_dev, std::abs(lhs - rhs));
                max_rhs = std::max(max_rhs, std::abs(rhs));
            }
        return max_dev / max_rhs;
    }

    const cd stau = -1.0 / P.tau;
    ThetaParams Q = make_theta_params(rs, P.k, stau);
    const cd C = half_power(stau / I, n) * std::pow(k, -0.5 * n) / volume(rs);
    const auto labels = theta_labels(rs, P.k);

    if (which == ThetaCheck::S) {
        for (const auto& x : pts) {
            Vec p(x.begin(), x.begin() + n), q(x.begin() + n, x.end()), mp(n);
            for (int i = 0; i < n; ++i) mp[i] = -p[i];
            std::vector<cd> img(labels.size());
            for (std::size_t b = 0; b < labels.size(); ++b) img[b] = section_value(Q, labels[b], p, q);
            for (const auto& mu : labels) {
                cd lhs = section_value(P, mu, q, mp);
                CompensatedSum s;
                for (std::size_t b = 0; b < labels.size(); ++b)
                    s.add(std::exp(-2.0 * pi * I * k * bform(rs, mu, labels[b])) * img[b]);
                cd rhs = C * s.value();
                max_dev = std::max(max_dev, std::abs(lhs - rhs));
                max_rhs = std::max(max_rhs, std::abs(rhs));
            }
        }
        return max_dev / max_rhs;
    }

    const auto weyl = weyl_elements(rs);
    std::vector<Vec> alc;
    for (const auto& a : alcove_points(rs, P.k)) alc.push_back(to_vec(a));
    for (const auto& x : pts) {
        Vec p(x.begin(), x.begin() + n), q(x.begin() + n, x.end()), mp(n);
        for (int i = 0; i < n; ++i) mp[i] = -p[i];
        std::vector<cd> img(alc.size());
        for (std::size_t b = 0; b < alc.size(); ++b) img[b] = alternating_value(Q, weyl, alc[b], p, q);
        for (const auto& mu : alc) {
            cd lhs = alternating_value(P, weyl, mu, q, mp);
            CompensatedSum s;
            for (std::size_t b = 0; b < alc.size(); ++b) {
                cd coef = 0;
                for (const auto& w : weyl)
                    coef += double(w.sign) *
                            std::exp(-2.0 * pi * I * k * bform(rs, mu, act(w.matrix, alc[b])));
                s.add(coef * img[b]);
            }
            cd rhs = C * s.value();
            max_dev = std::max(max_dev, std::abs(lhs - rhs));
            max_rhs = std::max(max_rhs, std::abs(rhs));
        }
    }
    return max_dev / max_rhs;
}

double alternating_sup(const ThetaParams& P, const Vec& mu, int npoints, std::uint64_t seed) {
    const auto weyl = weyl_elements(P.rs);
    const int n = P.rs.rank;
    double m = 0;
    for (const auto& x : random_points(npoints, n, seed)) {
        Vec p(x.begin(), x.begin() + n), q(x.begin() + n, x.end());
        m = std::max(m, std::abs(alternating_value(P, weyl, mu, p, q)));
    }
    return m;
}

KernelSample kernel_sample(const RootSystem& rs, int k, cd tau1, cd tau2, const Vec& p1,
                           const Vec& q1, const Vec& p2, const Vec& q2) {
    const int n = rs.rank;
    ThetaParams P1 = make_theta_params(rs, k, tau1), P2 = make_theta_params(rs, k, tau2);
    CompensatedSum s;
    for (const auto& mu : theta_labels(rs, k))
        s.add(section_value(P2, mu, p2, q2) * std::conj(section_value(P1, mu, p1, q1)));
    KernelSample out{p1, q1, p2, q2, std::pow(k / (2 * pi), 0.5 * n) * s.value(), {}};

    const cd w = tau2 - std::conj(tau1);
    std::vector<cd> z(n), z2(n), z1(n);
    for (int i = 0; i < n; ++i) {
        z2[i] = p2[i] + tau2 * q2[i];
        z1[i] = p1[i] + tau1 * q1[i];
        z[i] = z2[i] - std::conj(z1[i]);
    }
    std::vector<cd> q2c(q2.begin(), q2.end()), q1c(q1.begin(), q1.end());
    cd e = -pi * I * double(k) / w * bform(rs, z, z) + pi * I * double(k) * bform(rs, z2, q2c) -
           pi * I * double(k) * std::conj(bform(rs, z1, q1c));
    out.gaussian_model = std::pow(k / (2 * pi), double(n)) * half_power(2.0 * pi * I / w, n) *
                         volume(rs) * std::exp(e);
    return out;
}

PoissonCheck poisson_check(const RootSystem& rs, int k, cd tau1, cd tau2, const Vec& p1,
                           const Vec& q1, const Vec& p2, const Vec& q2) {
    if (rs.rank > 2) throw Error(ErrorCode::rank_guard, "theta checks are limited to rank <= 2");
    if (!(tau1.imag() > 0 && tau2.imag() > 0))
        throw Error(ErrorCode::invalid_argument, "Im tau must be positive");
    const int n = rs.rank;
    const double kd = k;
    std::vector<cd> z2(n), z1c(n), z(n);
    for (int i = 0; i < n; ++i) {
        z2[i] = p2[i] + tau2 * q2[i];
        z1c[i] = std::conj(p1[i] + tau1 * q1[i]);
        z[i] = z2[i] - z1c[i];
    }
    // both sides carry the factor s_{tau2}^k(x2) conj(s_{tau1}^k(x1)), which
    // keeps the terms of order one
    std::vector<cd> q2c(q2.begin(), q2.end()), q1c(q1.begin(), q1.end());
    const cd s_exp = pi * I * kd * bform(rs, z2, q2c) - pi * I * kd * bform(rs, z1c, q1c);

    Vec center(n);
    const double t1 = tau1.imag(), t2 = tau2.imag();
    for (int i = 0; i < n; ++i) center[i] = (t2 * q2[i] + t1 * q1[i]) / (t1 + t2);
    Vec vc(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vc[i] += kd * double(rs.gram(i, j)) * center[j];
    Vec g(n);
    cd theta_side = shell_sum(rounded(vc), [&](const std::vector<long long>& v) {
        for (int i = 0; i < n; ++i) {
            g[i] = 0;
            for (int j = 0; j < n; ++j) g[i] += static_cast<double>(rs.weight_basis(j, i)) * double(v[j]);
            g[i] /= kd;
        }
        std::vector<cd> gc(g.begin(), g.end());
        return 2.0 * pi * I * kd *
                   ((tau2 - std::conj(tau1)) / 2.0 * bform(rs, g, g) - bform(rs, z, gc)) +
               s_exp;
    });

    const cd w = tau2 - std::conj(tau1);
    Vec lc(n);
    for (int i = 0; i < n; ++i) lc[i] = -(p2[i] - p1[i]);
    std::vector<cd> lz(n);
    cd poisson_side = shell_sum(rounded(lc), [&](const std::vector<long long>& l) {
        for (int i = 0; i < n; ++i) lz[i] = double(l[i]) + z[i];
        return -pi * I * kd / w * bform(rs, lz, lz) + s_exp;
    });
    poisson_side *= half_power(I * kd / w, n) * volume(rs);
    return {theta_side, poisson_side, std::abs(theta_side - poisson_side) / std::abs(poisson_side)};
}

namespace {

// least-squares slope of ys against xs
std::optional<double> fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= xs.size();
    my /= xs.size();
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) return std::nullopt;
    return sxy / sxx;
}

} // namespace

bool KernelReport::diagonal_decays(double bound) const {
    if (diagonal_slope) return *diagonal_slope <= bound;
    // too few points above the floor to fit: the error must reach it and stay there
    auto first = std::find_if(diagonal_error.begin(), diagonal_error.end(),
                              [](double e) { return e <= kernel_noise_floor; });
    return first != diagonal_error.end() &&
           std::all_of(first, diagonal_error.end(), [](double e) { return e <= kernel_noise_floor; });
}

KernelReport kernel_check(const RootSystem& rs, const std::vector<int>& levels, cd tau1, cd tau2,
                          int samples, std::uint64_t seed) {
    if (rs.rank > 1) throw Error(ErrorCode::rank_guard, "kernel checks are limited to rank 1");
    const int n = rs.rank;
    const auto pts = random_points(samples, n, seed);
    // pairs separated by 0.3 in q and 0.1 in p
    const std::vector<std::pair<Vec, Vec>> far = {
        {{0.10, 0.20}, {0.20, 0.50}}, {{0.40, 0.70}, {0.50, 0.40}}, {{0.80, 0.05}, {0.70, 0.35}}};

    KernelReport rep;
    std::vector<double> dx, dy, ox, oy;
    for (int k : levels) {
        double diag = 0;
        for (const auto& x : pts) {
            Vec p(x.begin(), x.begin() + n), q(x.begin() + n, x.end());
            KernelSample s = kernel_sample(rs, k, tau1, tau2, p, q, p, q);
            diag = std::max(diag, std::abs(s.value / s.gaussian_model - 1.0));
        }
        double off = 0;
        for (const auto& [a, b] : far) {
            KernelSample s = kernel_sample(rs, k, tau1, tau2, {a[0]}, {a[1]}, {b[0]}, {b[1]});
            off = std::max(off, std::abs(s.value) / std::pow(k / (2 * pi), double(n)));
        }
        const auto& x0 = pts.front();
        Vec p(x0.begin(), x0.begin() + n), q(x0.begin() + n, x0.end());
        double perr = poisson_check(rs, k, tau1, tau2, p, q, p, q).relative_error;

        rep.levels.push_back(k);
        rep.diagonal_error.push_back(diag);
        rep.off_diagonal.push_back(off);
        rep.poisson_error.push_back(perr);
        rep.max_poisson_error = std::max(rep.max_poisson_error, perr);
        if (diag > kernel_noise_floor) dx.push_back(std::log(double(k))), dy.push_back(std::log(diag));
        if (off > kernel_noise_floor) ox.push_back(double(k)), oy.push_back(std::log(off));
    }
    rep.diagonal_slope = fit_slope(dx, dy);
    if (auto s = fit_slope(ox, oy)) rep.decay_rate = -*s;
    return rep;
}

} // namespace wrt
