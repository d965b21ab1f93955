#include "doctest.h"

#include "wrt/errors.hpp"
#include "wrt/modular.hpp"

#include <random>

using namespace wrt;

TEST_CASE("word parsing") {
    ModularWord w = ModularWord::parse("T S^-1 T^-1 S");
    CHECK(w.matrix() == SL2{2, 1, 1, 1});
    CHECK(ModularWord::parse("S S").matrix() == SL2{-1, 0, 0, -1});
    CHECK(ModularWord::parse("T^3").matrix() == SL2{1, 3, 0, 1});
    CHECK(ModularWord::parse("").empty());
    CHECK(ModularWord::parse("G S -").contains(Letter::Gamma));
    CHECK(ModularWord::parse(w.str()).matrix() == w.matrix());
    for (const char* bad : {"X", "S^", "T^a", "S^1.5", "^2"}) {
        CAPTURE(bad);
        try {
            ModularWord::parse(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::invalid_word);
        }
    }
}

TEST_CASE("Moebius action") {
    // A.tau = (a tau - b)/(-c tau + d)
    cd t(0.3, 1.2);
    CHECK(std::abs(mobius(S_gen, t) - (-1.0 / t)) < 1e-15);
    CHECK(std::abs(mobius(T_gen, t) - (t - 1.0)) < 1e-15);
    SL2 A{2, 1, 1, 1}, B{3, 2, 1, 1};
    CHECK(std::abs(mobius(A * B, t) - mobius(A, mobius(B, t))) < 1e-12);
}

TEST_CASE("sl2_to_word round trip") {
    CHECK(sl2_to_word(T_gen).str() == "T");
    CHECK(sl2_to_word(SL2{-1, 0, 0, -1}).matrix() == SL2{-1, 0, 0, -1});
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        SL2 A;
        for (int j = 0; j < 12; ++j) {
            switch (pick(gen)) {
            case 0: A = A * S_gen; break;
            case 1: A = A * T_gen; break;
            case 2: A = A * inverse(T_gen); break;
            default: A = A * inverse(S_gen);
            }
        }
        CHECK(sl2_to_word(A).matrix() == A);
    }
    for (SL2 A : {SL2{2, 1, 1, 1}, SL2{3, 2, 1, 1}, SL2{5, 2, 2, 1}, SL2{-2, -1, -1, -1}})
        CHECK(sl2_to_word(A).matrix() == A);
}

TEST_CASE("M2 group law") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        M2Element id = m2_identity(n);
        CHECK(m2_compose(id, id) == id);
        M2Element minus{SL2{}, -1, n};
        CHECK(m2_compose(minus, minus) == id);
        M2Element s = m2_from_word(ModularWord::parse("S"), n);
        M2Element s2 = m2_compose(s, s);
        M2Element s4 = m2_compose(s2, s2);
        CHECK(s4.A == SL2{});
        CHECK(s4.branch == (n % 2 == 0 ? 1 : -1));
        CHECK(m2_compose(s, m2_inverse(s)) == id);
    }
}

TEST_CASE("M2 composition agrees with the cocycle") {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<int> pick(0, 2), len(1, 6);
    const char* letters[] = {"S", "T", "T^-1"};
    for (int trial = 0; trial < 40; ++trial) {
        std::string a, b;
        for (int j = len(gen); j > 0; --j) a += std::string(letters[pick(gen)]) + " ";
        for (int j = len(gen); j > 0; --j) b += std::string(letters[pick(gen)]) + " ";
        for (int n : {1, 2, 3}) {
            M2Element x = m2_from_word(ModularWord::parse(a), n);
            M2Element y = m2_from_word(ModularWord::parse(b), n);
            M2Element z = m2_compose(x, y);
            CHECK(z == m2_from_word(ModularWord::parse(a + b), n));
            cd tau(0.17, 0.91);
            cd lhs = z.e(tau), rhs = x.e(mobius(y.A, tau)) * y.e(tau);
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("Mp and its map to M2") {
    MpElement s = mp_from_word(ModularWord::parse("S"));
    MpElement s4 = mp_compose(mp_compose(s, s), mp_compose(s, s));
    CHECK(s4.A == SL2{});
    CHECK(s4.branch == -1);
    MpElement s8 = mp_compose(s4, s4);
    CHECK(s8.branch == 1);
    for (int n : {1, 3, 5}) {
        M2Element m = mp_to_m2(s, n);
        CHECK(m.A == S_gen);
        cd tau(0.2, 1.3);
        CHECK(std::abs(m.e(tau) - s.z(tau) * std::pow(-tau, (n - 1) / 2)) < 1e-12);
    }
    ModularWord w = ModularWord::parse("T S T^-1 S S");
    CHECK(mp_from_word(word_for(mp_from_word(w))) == mp_from_word(w));
    CHECK(m2_from_word(word_for(m2_from_word(w, 2)), 2) == m2_from_word(w, 2));
}

TEST_CASE("overflow guard") {
    try {
        sl2_power(T_gen, 1LL << 62) * sl2_power(T_gen, 1LL << 62);
        FAIL("overflow not detected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::size_guard);
    }
}
