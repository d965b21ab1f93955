#include "doctest.h"

#include "wrt/cli.hpp"
#include "wrt/errors.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wrt;
using nlohmann::json;
using cd = std::complex<double>;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "wrt_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("parse_complex") {
    CHECK(parse_complex("0+1i") == cd(0, 1));
    CHECK(parse_complex("1.5-2i") == cd(1.5, -2));
    CHECK(parse_complex("2i") == cd(0, 2));
    CHECK(parse_complex("-i") == cd(0, -1));
    CHECK(parse_complex("1-i") == cd(1, -1));
    CHECK(parse_complex("-0.3") == cd(-0.3, 0));
    CHECK(parse_complex("1e-2+3e1i") == cd(0.01, 30));
    CHECK_THROWS_AS(parse_complex("1+"), Error);
    CHECK_THROWS_AS(parse_complex("abc"), Error);
}

TEST_CASE("parse_levels") {
    CHECK(parse_levels("5") == std::vector<int>{5});
    CHECK(parse_levels("2:4") == std::vector<int>{2, 3, 4});
    CHECK(parse_levels("10:40:10") == std::vector<int>{10, 20, 30, 40});
    CHECK_THROWS_AS(parse_levels("4:2"), Error);
    CHECK_THROWS_AS(parse_levels("1:5:0"), Error);
    CHECK_THROWS_AS(parse_levels("a:b"), Error);
}

TEST_CASE("info") {
    Run r = run({"info", "--group", "G2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["rank"] == 2);
    CHECK(j["h_dual"] == 4);
    CHECK(j["dim"] == 14);
    CHECK(j["weyl_order"] == 12);
}

TEST_CASE("weights") {
    Run r = run({"weights", "--group", "A1", "--level", "2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["weights"].size() == 1);
    CHECK(json::parse(run({"weights", "--group", "A2", "--level", "5"}).out)["weights"].size() == 6);
}

TEST_CASE("file round trips") {
    auto wpath = scratch("weights.json"), spath = scratch("s.json");
    REQUIRE(run({"--out", wpath.string(), "weights", "--group", "B2", "--level", "6"}).code == 0);
    CHECK(run({"weights", "--from-file", wpath.string()}).code == 0);
    REQUIRE(run({"--out", spath.string(), "smatrix", "--group", "A2", "--level", "6", "--norm",
                 "fusion"}).code == 0);
    Run again = run({"smatrix", "--from-file", spath.string()});
    CHECK(again.code == 0);
    CHECK(json::parse(again.out)["norm"] == "fusion");

    std::ifstream in(spath);
    json tampered = json::parse(in);
    tampered["re"][0][0] = tampered["re"][0][0].get<double>() + 1e-6;
    std::ofstream(spath) << tampered.dump();
    CHECK(run({"smatrix", "--from-file", spath.string()}).code == int(ErrorCode::invalid_argument));
}

TEST_CASE("error codes") {
    auto code_of = [](const Run& r) { return json::parse(r.err)["code"].get<int>(); };
    Run g = run({"info", "--group", "X3"});
    CHECK(g.code == int(ErrorCode::invalid_group));
    CHECK(code_of(g) == g.code);
    Run k = run({"smatrix", "--group", "A2", "--level", "2"});
    CHECK(k.code == int(ErrorCode::invalid_level));
    Run h = run({"asympt", "--group", "A1", "--word", "T", "--levels", "5:20:5"});
    CHECK(h.code == int(ErrorCode::non_hyperbolic));
    CHECK(json::parse(h.err)["error"].is_string());
    CHECK(run({"nonsense"}).code == int(ErrorCode::invalid_argument));
    CHECK(run({"word", "--matrix", "2,0,0,1"}).code == int(ErrorCode::invalid_word));
}

TEST_CASE("word and matrix") {
    Run r = run({"word", "--matrix", "2,1,1,1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["trace"] == 3);
    CHECK(j["matrix"] == json::array({json::array({2, 1}), json::array({1, 1})}));
    Run back = run({"word", "--word", j["word"].get<std::string>()});
    CHECK(json::parse(back.out)["matrix"] == j["matrix"]);
}

TEST_CASE("asympt csv") {
    Run r = run({"asympt", "--group", "A1", "--word", "T S^-1 T^-1 S", "--levels", "10:30:10"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("k,exact_re", 0) == 0);
    CHECK(r.out.find("# prefactor=i^ind") != std::string::npos);
    CHECK(r.out.find("# index=0") != std::string::npos);
}

TEST_CASE("seeded checks are reproducible") {
    std::vector<std::string> args = {"--seed", "7", "theta", "--group", "A1", "--level", "3",
                                     "--check", "modular", "--tau", "0.1+0.9i"};
    Run a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j["S"].get<double>() < 1e-8);
    CHECK(j["T"].get<double>() < 1e-8);
}
