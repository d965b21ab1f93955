#include "doctest.h"

#include "wrt/errors.hpp"
#include "wrt/fixedpt.hpp"
#include "wrt/oracles.hpp"

#include <numbers>
#include <random>

using namespace wrt;

namespace {
const SL2 A0{2, 1, 1, 1};
WeylElement weyl(const char* g, std::size_t i) { return weyl_elements(parse_group(g))[i]; }
} // namespace

TEST_CASE("tensor matrix") {
    IntMatrix m = tensor_matrix(SL2{}, weyl("A2", 0));
    CHECK(m == IntMatrix::identity(4));
    IntMatrix p = tensor_matrix(A0, weyl("A1", 0)), n = tensor_matrix(A0, weyl("A1", 1));
    CHECK(p(0, 0) == 2);
    CHECK(p(0, 1) == 1);
    CHECK(p(1, 0) == 1);
    CHECK(p(1, 1) == 1);
    CHECK(n(0, 0) == -2);
    CHECK(n(0, 1) == -1);
    CHECK(n(1, 0) == -1);
    CHECK(n(1, 1) == -1);
}

TEST_CASE("Smith normal form") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> u(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + trial % 4;
        BigMatrix m(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) m(i, j) = u(gen);
        SmithForm s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        for (std::size_t i = 0; i < r; ++i) {
            CHECK(s.D(i, i) == s.diagonal[i]);
            CHECK(s.diagonal[i] >= 0);
            for (std::size_t j = 0; j < r; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
            if (i + 1 < r && s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
    }
}

TEST_CASE("A1 fixed points") {
    RootSystem rs = parse_group("A1");
    auto plus = fixed_points(A0, weyl("A1", 0), rs);
    REQUIRE(plus.size() == 1);
    CHECK(plus[0].point.coords == RatVec{0, 0});
    CHECK(plus[0].theta_over_pi == 0);
    CHECK(cs_phase(plus[0], rs) == 0);
    auto minus = fixed_points(A0, weyl("A1", 1), rs);
    CHECK(minus.size() == 5);
    CHECK(det_factor(A0, weyl("A1", 0), rs) == doctest::Approx(1.0));
    CHECK(det_factor(A0, weyl("A1", 1), rs) == doctest::Approx(std::sqrt(5.0)));
    CHECK(det_factor(A0, weyl("A2", 0), parse_group("A2")) == doctest::Approx(1.0));

    // theta/pi = B(mu,p) - B(gamma,q) + B(gamma,mu) with B(x,y) = 2xy, by hand
    std::multiset<std::pair<long long, long long>> ours, hand;
    auto key = [](cd z) { return std::make_pair(std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9)); };
    for (const auto& f : minus) ours.insert(key(cs_exponential(f.theta_over_pi, 1)));
    for (const RatVec& x : oracle::brute_force_fixed_points(A0, weyl("A1", 1), rs)) {
        Rational p = x[0], q = x[1];
        Rational g = -2 * p - q - p, mu = -p - q - q;
        Rational th = 2 * mu * p - 2 * g * q + 2 * g * mu;
        hand.insert(key(std::exp(cd(0, std::numbers::pi * static_cast<double>(th)))));
    }
    CHECK(ours == hand);
}

TEST_CASE("fixed points agree with the brute-force grid") {
    for (const char* g : {"A1", "A2", "B2"}) {
        RootSystem rs = parse_group(g);
        for (SL2 A : {SL2{2, 1, 1, 1}, SL2{3, 2, 1, 1}, SL2{5, 2, 2, 1}}) {
            for (const auto& w : weyl_elements(rs)) {
                auto fps = fixed_points(A, w, rs);
                std::set<RatVec> pts;
                for (const auto& f : fps) {
                    pts.insert(f.point.coords);
                    CHECK(cs_phase(f, rs) == f.theta_over_pi);
                    CHECK(cs_phase_at(f.point.coords, A, w, rs) == f.theta_over_pi);
                }
                CHECK(Integer(fps.size()) == fixed_point_count(A, w, rs));
                CHECK(pts.size() == fps.size());
                CHECK(pts == oracle::brute_force_fixed_points(A, w, rs));
            }
        }
    }
}

TEST_CASE("lattice shifts leave exp(ik theta) unchanged") {
    RootSystem rs = parse_group("A2");
    std::uint64_t seed = 5;
    for (const auto& w : weyl_elements(rs)) CHECK(oracle::shift_invariance(A0, w, rs, 30, seed++).empty());
}

TEST_CASE("singular and non-fixed inputs") {
    RootSystem rs = parse_group("A1");
    try {
        fixed_points(SL2{}, weyl("A1", 0), rs);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_fixed_points);
    }
    CHECK_THROWS_AS(cs_phase_at({Rational(1, 3), Rational(0)}, A0, weyl("A1", 0), rs), Error);
}

TEST_CASE("cs_exponential reduces exactly") {
    CHECK(cs_exponential(Rational(1, 2), 1) == cd(0, 1));
    CHECK(cs_exponential(Rational(1, 2), 4) == cd(1, 0));
    CHECK(std::abs(cs_exponential(Rational(1, 3), 1000001) - std::exp(cd(0, std::numbers::pi / 3 * 1000001))) < 1e-9);
}
