#include "doctest.h"

#include "wrt/errors.hpp"
#include "wrt/thetalab.hpp"

#include <cmath>
#include <numbers>

using namespace wrt;

namespace {
const double pi = std::numbers::pi;
const cd I(0, 1);

Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
} // namespace

TEST_CASE("parameter validation") {
    RootSystem a1 = parse_group("A1");
    CHECK(make_theta_params(a1, 3, I).truncation_radius >= 2);
    auto code = [&](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return int(e.code());
        }
        return 0;
    };
    CHECK(code([&] { make_theta_params(parse_group("A3"), 2, I); }) == int(ErrorCode::rank_guard));
    CHECK(code([&] { make_theta_params(a1, 0, I); }) == int(ErrorCode::invalid_level));
    CHECK(code([&] { make_theta_params(a1, 2, cd(1, 0)); }) == int(ErrorCode::invalid_argument));
    CHECK(code([&] { make_theta_params(a1, 2, I, 1); }) == int(ErrorCode::truncation));
}

TEST_CASE("theta labels") {
    for (const char* g : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs = parse_group(g);
        for (int k : {1, 2, 3}) {
            auto labels = theta_labels(rs, k);
            CHECK(labels.size() == std::size_t(std::pow(k, rs.rank)) * std::size_t(rs.gram_det));
            for (const auto& mu : labels)
                for (double c : mu) CHECK((c >= 0 && c < 1));
        }
    }
}

TEST_CASE("theta at large imaginary tau") {
    RootSystem a1 = parse_group("A1");
    ThetaParams P = make_theta_params(a1, 2, cd(0, 10));
    CHECK(std::abs(theta_value(P, {0.0}, {0.0}, {0.0}) - 1.0) < 1e-12);
}

TEST_CASE("quasi-periodicity and label periodicity") {
    for (const char* g : {"A1", "A2"}) {
        RootSystem rs = parse_group(g);
        const int k = 3;
        ThetaParams P = make_theta_params(rs, k, cd(0.2, 1.1));
        Vec mu = theta_labels(rs, k)[1];
        Vec p(rs.rank, 0.17), q(rs.rank, 0.41);
        Vec lam(rs.rank, 0.0);
        lam[0] = 1;
        lam.back() -= 2;
        cd base = section_value(P, mu, p, q);
        cd shifted_p = section_value(P, mu, add(p, lam), q);
        cd shifted_q = section_value(P, mu, p, add(q, lam));
        CHECK(std::abs(shifted_p - std::exp(I * pi * double(k) * bilinear(rs, lam, q)) * base) < 1e-12);
        CHECK(std::abs(shifted_q - std::exp(-I * pi * double(k) * bilinear(rs, p, lam)) * base) < 1e-12);
        CHECK(std::abs(theta_value(P, add(mu, lam), p, q) - theta_value(P, mu, p, q)) < 1e-12);
    }
}

TEST_CASE("truncation radius is sufficient") {
    RootSystem a2 = parse_group("A2");
    ThetaParams P = make_theta_params(a2, 4, cd(0.3, 0.7));
    ThetaParams Q = make_theta_params(a2, 4, cd(0.3, 0.7), 2 * P.truncation_radius);
    Vec mu = theta_labels(a2, 4)[5], p{0.3, -0.2}, q{0.6, 0.9};
    CHECK(std::abs(section_value(P, mu, p, q) - section_value(Q, mu, p, q)) < 1e-12);
}

TEST_CASE("section norms") {
    RootSystem a1 = parse_group("A1");
    CHECK(std::abs(section_norm2_formula(a1, 1, I) - 2 * pi) < 1e-12);
    for (int k : {1, 4, 7}) {
        for (cd tau : {I, cd(1, 1), cd(0, 2)}) {
            ThetaParams P = make_theta_params(a1, k, tau);
            QuadratureResult g = section_gram(P);
            double f = section_norm2_formula(a1, k, tau);
            double offdiag = 0;
            for (int i = 0; i < g.gram.rows(); ++i) {
                CHECK(std::abs(g.gram(i, i) - f) < 1e-6 * f);
                for (int j = 0; j < g.gram.cols(); ++j)
                    if (i != j) offdiag = std::max(offdiag, std::abs(g.gram(i, j)));
            }
            CHECK(offdiag < 1e-8 * f);
        }
    }
    RootSystem a2 = parse_group("A2");
    ThetaParams P = make_theta_params(a2, 2, I);
    double f = section_norm2_formula(a2, 2, I);
    CHECK(std::abs(section_norm2(P, theta_labels(a2, 2)[3]) - f) < 1e-6 * f);
}

TEST_CASE("modular action on theta sections") {
    for (const char* g : {"A1", "A2"}) {
        RootSystem rs = parse_group(g);
        for (int k : {2, 3}) {
            ThetaParams P = make_theta_params(rs, k, cd(0.15, 0.9));
            CHECK(verify_modular_action(P, ThetaCheck::S, 20) < 1e-8);
            CHECK(verify_modular_action(P, ThetaCheck::T, 20) < 1e-8);
            if (k >= rs.dual_coxeter)
                CHECK(verify_modular_action(P, ThetaCheck::alternating_S, 20) < 1e-8);
        }
    }
    CHECK_THROWS_AS(verify_modular_action(make_theta_params(parse_group("A1"), 13, I), ThetaCheck::S),
                    Error);
}

TEST_CASE("alternating sums vanish on walls") {
    RootSystem a1 = parse_group("A1");
    const int k = 5;
    ThetaParams P = make_theta_params(a1, k, cd(0.1, 1.3));
    CHECK(alternating_sup(P, {0.0}) < 1e-14);
    CHECK(alternating_sup(P, {0.5}) < 1e-12);
    CHECK(alternating_sup(P, {1.0 / (2 * k)}) > 1e-3);
}

TEST_CASE("Poisson identity") {
    RootSystem a1 = parse_group("A1");
    PoissonCheck pc = poisson_check(a1, 10, I, I, {0.3}, {0.1}, {0.3}, {0.1});
    CHECK(pc.relative_error < 1e-9);
    PoissonCheck half = poisson_check(a1, 6, I, cd(0, 2), {0.2}, {0.45}, {0.2}, {0.45});
    CHECK(half.relative_error < 1e-9);
}

TEST_CASE("Bergman kernel") {
    RootSystem a1 = parse_group("A1");
    KernelSample s = kernel_sample(a1, 40, I, I, {0.3}, {0.6}, {0.3}, {0.6});
    CHECK(std::abs(s.value / s.gaussian_model - 1.0) < 1e-10);
    KernelReport r = kernel_check(a1, {5, 10, 15, 20}, I, cd(0, 2));
    CHECK(r.diagonal_decays());
    CHECK(r.max_poisson_error < 1e-9);
    REQUIRE(r.decay_rate.has_value());
    CHECK(*r.decay_rate > 0.1);
    CHECK_THROWS_AS(kernel_check(parse_group("A2"), {5}, I, I), Error);
}
