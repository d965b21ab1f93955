#include "wrt/corpus.hpp"
#include "wrt/errors.hpp"
#include "wrt/maslov.hpp"
#include "wrt/modrep.hpp"
#include "wrt/numeric.hpp"
#include "wrt/oracles.hpp"
#include "wrt/semiclassics.hpp"

#include <openssl/evp.h>

#include <fnmatch.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace wrt {

using nlohmann::json;

namespace {

constexpr double golden_float_tolerance = 1e-9;

double max_dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

void record(CaseOutput& out, const CorpusCase& c, const std::string& check, double dev, double tol,
            std::string msg = {}) {
    out.checks.push_back({c.id, check, dev, tol, dev <= tol, std::move(msg)});
}

QuantumSpace space(const CorpusCase& c, int k) { return QuantumSpace(parse_group(c.group), k); }

void check_sine_formula(const CorpusCase& c, CaseOutput& out) {
    RootSystem rs = parse_group(c.group);
    if (rs.family != Family::A || rs.rank != 1)
        throw Error(ErrorCode::corpus_error, c.id + ": sine-formula needs A1");
    double dev = 0;
    for (int k : c.levels) {
        QuantumSpace qs(rs, k);
        dev = std::max(dev, max_dev(s_matrix(qs, Normalization::fusion).entries,
                                    oracle::su2_s_matrix(k).cast<cd>()));
        Eigen::MatrixXcd t = t_matrix(qs, Normalization::fusion).entries;
        dev = std::max(dev, max_dev(t, oracle::su2_t_diagonal(k).asDiagonal().toDenseMatrix()));
        out.exact["dimension"][std::to_string(k)] = qs.dimension();
    }
    record(out, c, "sine-formula", dev, 1e-12);
}

void check_unitarity(const CorpusCase& c, CaseOutput& out) {
    double dev = 0;
    for (int k : c.levels) {
        QuantumSpace qs = space(c, k);
        for (Normalization n : {Normalization::geometric, Normalization::fusion}) {
            dev = std::max(dev, unitarity_defect(s_matrix(qs, n).entries));
            dev = std::max(dev, unitarity_defect(t_matrix(qs, n).entries));
        }
        out.exact["dimension"][std::to_string(k)] = qs.dimension();
    }
    record(out, c, "unitarity", dev, 1e-10);
}

void check_relations(const CorpusCase& c, CaseOutput& out) {
    double dev = 0;
    auto W = [](const char* s) { return ModularWord::parse(s); };
    for (int k : c.levels) {
        QuantumSpace qs = space(c, k);
        const auto id = Eigen::MatrixXcd::Identity(qs.dimension(), qs.dimension());
        auto rinf = [&](const char* s) { return represent(W(s), qs, Extension::inf).entries; };
        dev = std::max(dev, max_dev(rinf("S T S T S T"), rinf("S S")));
        dev = std::max(dev, max_dev(rinf("G S S G S S"), id));
        dev = std::max(dev, max_dev(rinf("G S"), rinf("S G")));
        dev = std::max(dev, max_dev(rinf("G T"), rinf("T G")));
        dev = std::max(dev, max_dev(rinf("S S T"), rinf("T S S")));
        if (qs.root_system().rank % 2 == 0) {
            auto rev = [&](const char* s) { return represent(W(s), qs, Extension::ev).entries; };
            dev = std::max(dev, max_dev(rev("S S S S"), id));
            dev = std::max(dev, max_dev(rev("S T S T S T"), rev("S S")));
        }
    }
    record(out, c, "relations", dev, 1e-10);
}

void check_comparison(const CorpusCase& c, CaseOutput& out) {
    RootSystem rs = parse_group(c.group);
    double dev = 0;
    for (int k : c.levels) {
        ComparisonReport r = compare_representations(rs, k);
        dev = std::max(dev, r.max());
        CentralCharge cc = central_charge(rs, k);
        out.exact["central_charge"][std::to_string(k)] = to_string(cc.c);
    }
    record(out, c, "comparison", dev, 1e-10);
}

void check_fixed_points(const CorpusCase& c, CaseOutput& out) {
    RootSystem rs = parse_group(c.group);
    SL2 A = ModularWord::parse(c.word).matrix();
    out.exact["matrix"] = to_string(A);
    double bad = 0;
    json per = json::array();
    for (const auto& w : weyl_elements(rs)) {
        auto fps = fixed_points(A, w, rs);
        std::set<RatVec> ours;
        json thetas = json::array();
        for (const auto& f : fps) {
            ours.insert(f.point.coords);
            thetas.push_back(to_string(f.theta_over_pi));
        }
        Integer det = fixed_point_count(A, w, rs);
        if (Integer(fps.size()) != det) bad += 1;
        if (ours != oracle::brute_force_fixed_points(A, w, rs)) bad += 1;
        per.push_back({{"count", fps.size()}, {"theta_over_pi", thetas}});
    }
    out.exact["fixed_points"] = per;
    record(out, c, "fixed-point-count", bad, 0, bad > 0 ? "count or point set differs from oracle" : "");
}

void check_theta_shift(const CorpusCase& c, CaseOutput& out) {
    RootSystem rs = parse_group(c.group);
    SL2 A = ModularWord::parse(c.word).matrix();
    double bad = 0;
    std::uint64_t seed = 1;
    for (const auto& w : weyl_elements(rs)) {
        auto d = oracle::shift_invariance(A, w, rs, 100, seed++);
        bad += double(d.size());
        // the stored representative agrees with the oracle's formula
        for (const auto& f : fixed_points(A, w, rs))
            if (cs_phase_at(f.point.coords, A, w, rs) != f.theta_over_pi) bad += 1;
    }
    record(out, c, "theta-shift", bad, 0, bad > 0 ? "e^{ik theta} changed under a lattice shift" : "");
}

void check_index(const CorpusCase& c, CaseOutput& out) {
    RootSystem rs = parse_group(c.group);
    ModularWord w = ModularWord::parse(c.word);
    M2Element x = m2_from_word(w, rs.rank);
    int ind = metaplectic_index(x, rs);
    const cd tau(0.13, 1.07);
    int blocks = index_tensor_blocks(x.A, sigma(x, tau), rs.rank, tau);
    out.exact["index"] = ind;
    out.exact["epsilon"] = epsilon_of(x.A);
    record(out, c, "index", ind == blocks ? 0.0 : 1.0, 0, ind == blocks ? "" : "tensor and block indices differ");
}

void check_trace(const CorpusCase& c, CaseOutput& out) {
    RootSystem rs = parse_group(c.group);
    ModularWord w = ModularWord::parse(c.word);
    Extension ext = default_trace_extension(rs);
    AsymptoticModel model(w, rs, ext);
    double dev = 0;
    for (int k : c.levels) {
        cd ex = exact_trace(w, rs, k, ext);
        cd as = model.evaluate(k);
        dev = std::max(dev, std::abs(ex - as));
        out.floating["trace"][std::to_string(k)] = complex_json(ex);
    }
    out.exact["index"] = model.index();
    record(out, c, "trace-asymptotics", dev, 1e-9);
}

const std::map<std::string, std::function<void(const CorpusCase&, CaseOutput&)>> check_table = {
    {"sine-formula", check_sine_formula},   {"unitarity", check_unitarity},
    {"relations", check_relations},         {"comparison", check_comparison},
    {"fixed-point-count", check_fixed_points}, {"theta-shift", check_theta_shift},
    {"index", check_index},                 {"trace-asymptotics", check_trace},
};

double float_deviation(const json& a, const json& b) {
    if (a.is_number() && b.is_number()) return std::abs(a.get<double>() - b.get<double>());
    if (a.type() != b.type() || a.size() != b.size()) return INFINITY;
    double d = 0;
    if (a.is_array()) {
        for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, float_deviation(a[i], b[i]));
    } else if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) return INFINITY;
            d = std::max(d, float_deviation(it.value(), b.at(it.key())));
        }
    } else if (a != b) {
        return INFINITY;
    }
    return d;
}

} // namespace

bool CorpusReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

json CorpusReport::to_json() const {
    json a = json::array();
    for (const auto& r : results)
        a.push_back({{"case", r.case_id},
                     {"check", r.check},
                     {"deviation", r.deviation},
                     {"tolerance", r.tolerance},
                     {"passed", r.passed},
                     {"message", r.message}});
    return {{"passed", passed()}, {"results", a}};
}

std::filesystem::path default_corpus_dir() {
#ifdef WRT_CORPUS_DIR
    return WRT_CORPUS_DIR;
#else
    return "corpus";
#endif
}

std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir) {
    std::ifstream in(dir / "cases.json");
    if (!in) throw Error(ErrorCode::io_error, "cannot read " + (dir / "cases.json").string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::corpus_error, std::string("cases.json: ") + e.what());
    }
    if (j.value("version", 0) != 1) throw Error(ErrorCode::corpus_error, "unsupported corpus version");
    std::vector<CorpusCase> out;
    try {
        for (const auto& c : j.at("cases")) {
            CorpusCase cc;
            cc.id = c.at("id").get<std::string>();
            cc.group = c.at("group").get<std::string>();
            const json& lv = c.at("levels");
            if (lv.is_array()) {
                cc.levels = lv.get<std::vector<int>>();
            } else {
                int step = lv.value("step", 1);
                for (int k = lv.at("from").get<int>(); k <= lv.at("to").get<int>(); k += step)
                    cc.levels.push_back(k);
            }
            cc.word = c.value("word", "");
            cc.checks = c.at("checks").get<std::vector<std::string>>();
            cc.golden = c.value("golden", "golden/" + cc.id + ".json");
            for (const auto& ch : cc.checks)
                if (!check_table.count(ch))
                    throw Error(ErrorCode::corpus_error, cc.id + ": unknown check " + ch);
            out.push_back(std::move(cc));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::corpus_error, std::string("cases.json: ") + e.what());
    }
    return out;
}

CaseOutput run_case(const CorpusCase& c) {
    CaseOutput out;
    out.exact["group"] = c.group;
    out.exact["levels"] = c.levels;
    out.exact["word"] = c.word;
    for (const auto& ch : c.checks) check_table.at(ch)(c, out);
    return out;
}

std::string exact_hash(const json& exact) {
    const std::string text = exact.dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::corpus_error, "SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

CorpusReport run_corpus(const std::string& filter, const std::filesystem::path& dir, bool write_golden) {
    std::vector<CorpusCase> selected;
    for (auto& c : load_corpus(dir))
        if (filter.empty() || fnmatch(filter.c_str(), c.id.c_str(), 0) == 0) selected.push_back(std::move(c));

    std::vector<std::vector<CheckResult>> per_case(selected.size());
    parallel_for(selected.size(), [&](std::size_t i) {
        const CorpusCase& c = selected[i];
        auto& res = per_case[i];
        CaseOutput out;
        try {
            out = run_case(c);
        } catch (const std::exception& e) {
            res.push_back({c.id, "run", INFINITY, 0, false, e.what()});
            return;
        }
        res = out.checks;
        const std::string hash = exact_hash(out.exact);
        const auto path = dir / c.golden;
        if (write_golden) {
            std::filesystem::create_directories(path.parent_path());
            json g = {{"id", c.id},
                      {"exact", out.exact},
                      {"exact_sha256", hash},
                      {"float", out.floating},
                      {"float_tolerance", golden_float_tolerance}};
            std::ofstream(path) << g.dump(2) << "\n";
            return;
        }
        std::ifstream in(path);
        if (!in) {
            res.push_back({c.id, "golden", INFINITY, 0, false, "missing golden file " + c.golden});
            return;
        }
        json g;
        try {
            g = json::parse(in);
        } catch (const json::exception& e) {
            res.push_back({c.id, "golden", INFINITY, 0, false, e.what()});
            return;
        }
        bool hash_ok = g.value("exact_sha256", "") == hash && g.value("exact", json()) == out.exact;
        res.push_back({c.id, "golden-exact", hash_ok ? 0.0 : 1.0, 0, hash_ok,
                       hash_ok ? "" : "hash mismatch on exact fields"});
        double tol = g.value("float_tolerance", golden_float_tolerance);
        double fd = float_deviation(g.value("float", json::object()), out.floating);
        res.push_back({c.id, "golden-float", fd, tol, fd <= tol, ""});
    });

    CorpusReport rep;
    for (auto& v : per_case)
        for (auto& r : v) rep.results.push_back(std::move(r));
    return rep;
}

} // namespace wrt
