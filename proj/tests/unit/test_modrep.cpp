#include "doctest.h"

#include "wrt/errors.hpp"
#include "wrt/modrep.hpp"
#include "wrt/oracles.hpp"

#include <numbers>

using namespace wrt;

namespace {
const double pi = std::numbers::pi;
const cd I(0, 1);

double dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }
Eigen::MatrixXcd rep(const char* w, const QuantumSpace& qs, Extension e) {
    return represent(ModularWord::parse(w), qs, e).entries;
}
} // namespace

TEST_CASE("SU(2) closed form") {
    RootSystem rs = parse_group("A1");
    for (int k = 2; k <= 12; ++k) {
        CAPTURE(k);
        QuantumSpace qs(rs, k);
        CHECK(dev(s_matrix(qs, Normalization::fusion).entries, oracle::su2_s_matrix(k).cast<cd>()) < 1e-12);
        CHECK(dev(t_matrix(qs, Normalization::fusion).entries,
                  oracle::su2_t_diagonal(k).asDiagonal().toDenseMatrix()) < 1e-12);
    }
    Eigen::MatrixXcd t3 = t_matrix(rs, 3, Normalization::fusion).entries;
    CHECK(std::abs(t3(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(t3(1, 1) - I) < 1e-15);
    CHECK(t_matrix(rs, 2, Normalization::fusion).entries(0, 0) == cd(1, 0));
}

TEST_CASE("geometric T at the Weyl vector") {
    for (const char* g : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs = parse_group(g);
        int k = rs.dual_coxeter + 3;
        Eigen::MatrixXcd t = t_matrix(rs, k, Normalization::geometric).entries;
        double brr = static_cast<double>(pairing(rs, rs.rho, rs.rho));
        CHECK(std::abs(t(0, 0) - std::exp(I * pi * brr / double(k))) < 1e-12);
    }
}

TEST_CASE("geometric S for A1 is (-i)^0 times the Gauss matrix and real") {
    RootSystem rs = parse_group("A1");
    QuantumSpace qs(rs, 5);
    Eigen::MatrixXcd s = s_matrix(qs, Normalization::geometric).entries;
    CHECK(dev(s, qs.gauss_matrix()) < 1e-14);
    Eigen::MatrixXcd odd = rep("S", qs, Extension::odd);
    CHECK(dev(odd.cwiseAbs().cast<cd>(), s.cwiseAbs().cast<cd>()) < 1e-12);
}

TEST_CASE("A2 level 4: S squared is charge conjugation") {
    QuantumSpace qs(parse_group("A2"), 4);
    Eigen::MatrixXcd s = s_matrix(qs, Normalization::fusion).entries;
    CHECK(unitarity_defect(s) < 1e-12);
    CHECK(dev(s, s.transpose()) < 1e-12);
    Eigen::MatrixXcd s2 = s * s;
    for (Eigen::Index i = 0; i < s2.rows(); ++i) {
        int ones = 0;
        for (Eigen::Index j = 0; j < s2.cols(); ++j) {
            if (std::abs(s2(i, j) - 1.0) < 1e-12) ++ones;
            else CHECK(std::abs(s2(i, j)) < 1e-12);
        }
        CHECK(ones == 1);
    }
    CHECK(std::abs(s2(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("A2 level 4: R_ev(S) is -i k^-1 Vol^-1 times the Weyl sum") {
    QuantumSpace qs(parse_group("A2"), 4);
    Eigen::MatrixXcd s = rep("S", qs, Extension::ev);
    const double pref = 1.0 / (4.0 * std::sqrt(3.0));
    for (std::size_t i = 0; i < qs.dimension(); ++i)
        for (std::size_t j = 0; j < qs.dimension(); ++j)
            CHECK(std::abs(s(i, j) - (-I) * pref * qs.weyl_sum(i, j)) < 1e-12);
    const auto id = Eigen::MatrixXcd::Identity(3, 3);
    CHECK(dev(rep("S S S S", qs, Extension::ev), id) < 1e-10);
    CHECK(dev(rep("S T S T S T", qs, Extension::ev), rep("S S", qs, Extension::ev)) < 1e-10);
    CHECK(dev(rep("", qs, Extension::ev), id) < 1e-15);
}

TEST_CASE("R_odd central elements") {
    RootSystem rs = parse_group("A1");
    QuantumSpace qs(rs, 5);
    const auto id = Eigen::MatrixXcd::Identity(4, 4);
    CHECK(dev(rep("", qs, Extension::odd), id) < 1e-15);
    CHECK(dev(rep("-", qs, Extension::odd), -id) < 1e-15);
    Eigen::MatrixXcd s2 = rep("S S", qs, Extension::odd);
    cd c = s2(0, 0);
    CHECK(std::abs(std::abs(c) - 1.0) < 1e-12);
    CHECK(dev(s2, c * id) < 1e-12);
    cd tr = plan_trace(qs, plan_word(ModularWord::parse("S S"), rs, 5, Extension::odd));
    CHECK(std::abs(std::abs(tr) - 4.0) < 1e-12);
    QuantumSpace q3(rs, 3);
    Eigen::MatrixXcd s = rep("S", q3, Extension::odd);
    CHECK(dev(s * s, rep("S S", q3, Extension::odd)) < 1e-12);
}

TEST_CASE("R2alt: empty word and T at the Weyl vector") {
    RootSystem rs = parse_group("A2");
    RepMatrix e = r2alt(ModularWord::parse(""), rs, 5);
    CHECK(dev(e.entries, Eigen::MatrixXcd::Identity(e.entries.rows(), e.entries.cols())) < 1e-15);
    // B(rho, rho) = 2 for A2
    RepMatrix t = r2alt(ModularWord::parse("T"), rs, 5);
    CHECK(std::abs(t.entries(0, 0) - std::exp(I * pi * 2.0 / 5.0)) < 1e-12);
    QuantumSpace qs(rs, 5);
    CHECK(dev(rep("S S S S", qs, Extension::m2), Eigen::MatrixXcd::Identity(qs.dimension(), qs.dimension())) < 1e-10);
}

TEST_CASE("R-infinity relations") {
    for (const char* g : {"A1", "A2"}) {
        QuantumSpace qs(parse_group(g), 5);
        const auto id = Eigen::MatrixXcd::Identity(qs.dimension(), qs.dimension());
        CHECK(dev(rep("S T S T S T", qs, Extension::inf), rep("S S", qs, Extension::inf)) < 1e-10);
        CHECK(dev(rep("G S S G S S", qs, Extension::inf), id) < 1e-10);
        CHECK(dev(rep("", qs, Extension::inf), id) < 1e-15);
    }
}

TEST_CASE("zeta_k") {
    RootSystem rs = parse_group("A1");
    CHECK(std::abs(zeta_k(ModularWord::parse("S"), rs, 4) - std::exp(I * 3.0 * pi / 8.0)) < 1e-14);
    for (int k : {3, 4, 7}) {
        cd a = zeta_k(ModularWord::parse("S T S T S T"), rs, k) / zeta_k(ModularWord::parse("S S"), rs, k);
        CHECK(std::abs(a - 1.0) < 1e-12);
        CHECK(std::abs(zeta_k(ModularWord::parse("G S S G S S"), rs, k) - 1.0) < 1e-12);
    }
}

TEST_CASE("comparison theorem") {
    CHECK(compare_representations(parse_group("A1"), 3).max() < 1e-10);
    CHECK(compare_representations(parse_group("A2"), 4).max() < 1e-10);
    ComparisonReport r = compare_representations(parse_group("A1"), 5);
    CHECK(r.dev_t < 1e-13);
    for (const char* g : {"B2", "G2", "C3", "A3"}) {
        RootSystem rs = parse_group(g);
        CHECK(compare_representations(rs, rs.dual_coxeter + 2).max() < 1e-10);
    }
}

TEST_CASE("central charge") {
    CentralCharge c = central_charge(parse_group("A1"), 5);
    CHECK(c.c == Rational(9, 5));
    CHECK(c.x_k == Rational(6, 5));
}

TEST_CASE("extension preconditions") {
    RootSystem a1 = parse_group("A1"), a2 = parse_group("A2");
    CHECK_THROWS_AS(plan_word(ModularWord::parse("S"), a1, 4, Extension::ev), Error);
    CHECK_THROWS_AS(plan_word(ModularWord::parse("S"), a2, 4, Extension::odd), Error);
    CHECK_THROWS_AS(plan_word(ModularWord::parse("S"), a1, 2, Extension::inf), Error);
    CHECK_THROWS_AS(QuantumSpace(a2, 2), Error);
}

TEST_CASE("matrix-free trace agrees with dense products") {
    RootSystem rs = parse_group("A2");
    QuantumSpace qs(rs, 9);
    for (const char* w : {"T S^-1 T^-1 S", "T S T^-1 S", "S T^3", "T^2 S T S^-1 T"}) {
        for (Extension e : {Extension::ev, Extension::m2}) {
            WordPlan p = plan_word(ModularWord::parse(w), rs, 9, e);
            cd dense = evaluate_plan(qs, p).trace();
            CHECK(std::abs(plan_trace(qs, p) - dense) < 1e-10);
            CHECK(std::abs(plan_trace(qs, p, 0) - dense) < 1e-10);
        }
    }
}
