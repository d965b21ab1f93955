#include "doctest.h"

#include "wrt/alcove.hpp"
#include "wrt/errors.hpp"

using namespace wrt;

TEST_CASE("A1 admissible weights") {
    RootSystem rs = parse_group("A1");
    auto w2 = admissible_weights(rs, 2);
    REQUIRE(w2.size() == 1);
    CHECK(w2[0].admissible_form == IntVec{0});
    CHECK(w2[0].lambda == RatVec{Rational(1, 4)});

    auto w5 = admissible_weights(rs, 5);
    REQUIRE(w5.size() == 4);
    for (int m = 0; m < 4; ++m) {
        CHECK(w5[m].admissible_form == IntVec{m});
        CHECK(w5[m].lambda == RatVec{Rational(m + 1, 10)});
    }
    auto pts = alcove_points(rs, 5);
    REQUIRE(pts.size() == 4);
    for (int j = 1; j <= 4; ++j) CHECK(pts[j - 1] == RatVec{Rational(j, 10)});
}

TEST_CASE("A2 and G2 weights") {
    auto a2 = admissible_weights(parse_group("A2"), 4);
    REQUIRE(a2.size() == 3);
    std::set<IntVec> forms;
    for (const auto& w : a2) forms.insert(w.admissible_form);
    CHECK(forms == std::set<IntVec>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(alcove_points(parse_group("G2"), 4).size() == 1);
}

TEST_CASE("alcove points are interior and match the weights") {
    for (const char* g : {"A2", "B2", "G2", "A3", "C3"}) {
        RootSystem rs = parse_group(g);
        for (int k = rs.dual_coxeter; k <= rs.dual_coxeter + 4; ++k) {
            CAPTURE(g);
            CAPTURE(k);
            auto ws = admissible_weights(rs, k);
            auto pts = alcove_points(rs, k);
            REQUIRE(ws.size() == pts.size());
            for (std::size_t i = 0; i < ws.size(); ++i) {
                CHECK(ws[i].lambda == pts[i]);
                RatVec m = weight_from_labels(rs, ws[i].admissible_form);
                for (int j = 0; j < rs.rank; ++j) CHECK(pts[i][j] == (m[j] + rs.rho[j]) / k);
                for (int j = 0; j < rs.rank; ++j) CHECK(simple_root_value(rs, j, pts[i]) > 0);
                CHECK(highest_root_value(rs, pts[i]) < 1);
            }
        }
    }
}

TEST_CASE("level below the dual Coxeter number") {
    try {
        admissible_weights(parse_group("A2"), 2);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_level);
    }
}
