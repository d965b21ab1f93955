#include "doctest.h"

#include "wrt/errors.hpp"
#include "wrt/maslov.hpp"

#include <numbers>

using namespace wrt;

namespace {
const double pi = std::numbers::pi;
const SL2 A0{2, 1, 1, 1};
cd polar(double r, double a) { return std::polar(r, a); }
} // namespace

TEST_CASE("d(A, tau)") {
    CHECK(std::abs(d_of(SL2{}, cd(0, 1)) - 1.0) < 1e-15);
    // (-c tau + d) (A.tau - conj A.tau) / (tau - conj A.tau) with A.tau = (-3 + i)/2
    CHECK(std::abs(d_of(A0, cd(0, 1)) - 2.0 / 3.0) < 1e-15);
    CHECK(std::abs(d_of(T_gen, cd(0, 1)) - cd(0.8, 0.4)) < 1e-15);
}

TEST_CASE("index_2d quadrant rule") {
    const double r = std::sqrt(2.0 / 3.0);
    CHECK(index_2d({A0, std::nullopt, polar(r, -pi / 4), 0}) == 0);
    CHECK(index_2d({A0, std::nullopt, polar(r, 3 * pi / 4), 0}) == 2);
    CHECK(index_2d({-A0, std::nullopt, polar(r, pi / 4), 1}) == 1);
    try {
        index_from_arg(pi / 2 + 1e-12, 0);
        FAIL("boundary accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::branch_ambiguity);
    }
    CHECK_THROWS_AS(index_2d({A0, std::nullopt, cd(0), 0}), Error);
}

TEST_CASE("sigma") {
    CHECK(std::abs(sigma(m2_identity(1), cd(0.3, 0.8)) - 1.0) < 1e-15);
    M2Element t = m2_from_word(ModularWord::parse("T"), 1);
    // sigma(T, tau) - 1 is of order 1/(4 Im tau)
    for (double y : {100.0, 1e4}) {
        CHECK(std::abs(sigma(t, cd(0, y)) - 1.0) < 1.0 / (4 * y));
    }
    CHECK(std::abs(sigma(t, cd(0, 1e4)) - 1.0) < 1e-4);
}

TEST_CASE("metaplectic index") {
    RootSystem a1 = parse_group("A1"), a2 = parse_group("A2"), a4 = parse_group("A4");
    ModularWord w = ModularWord::parse("T S^-1 T^-1 S");
    CHECK(metaplectic_index(m2_from_word(w, 1), a1) == 0);
    CHECK(metaplectic_index(m2_from_word(w, 2), a2) == 0);
    ModularWord neg = ModularWord::parse("T S T^-1 S");
    REQUIRE(neg.matrix().trace() == -3);
    CHECK(metaplectic_index(m2_from_word(neg, 2), a2) == 2);
    CHECK(metaplectic_index(m2_from_word(neg, 4), a4) == 0);
    try {
        metaplectic_index(m2_from_word(ModularWord::parse("T"), 1), a1);
        FAIL("parabolic accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::non_hyperbolic);
    }
}

TEST_CASE("tensor and block indices agree") {
    const char* words[] = {"T S^-1 T^-1 S", "T S T^-1 S", "T^2 S T S", "- T S^-1 T^-1 S", "T^3 S^-1 T^-1 S",
                           "S T^-3 S T^-1"};
    for (int n = 1; n <= 4; ++n) {
        RootSystem rs = build_root_system(Family::A, n);
        WeylElement id{IntMatrix::identity(n), 1};
        for (const char* s : words) {
            ModularWord w = ModularWord::parse(s);
            if (std::llabs(w.matrix().trace()) <= 2) continue;
            M2Element x = m2_from_word(w, n);
            for (cd tau : {cd(0.13, 1.07), cd(-0.21, 0.93), cd(0.31, 1.43)}) {
                CAPTURE(s);
                CAPTURE(n);
                CHECK(index_tensor(x.A, id, sigma(x, tau), rs, tau) ==
                      index_tensor_blocks(x.A, sigma(x, tau), n, tau));
            }
        }
    }
}
