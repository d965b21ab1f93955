#include "wrt/cli.hpp"
#include "wrt/alcove.hpp"
#include "wrt/corpus.hpp"
#include "wrt/errors.hpp"
#include "wrt/fixedpt.hpp"
#include "wrt/maslov.hpp"
#include "wrt/modrep.hpp"
#include "wrt/semiclassics.hpp"
#include "wrt/thetalab.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

namespace wrt {

using nlohmann::json;

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    static const std::string num = R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))";
    static const std::string coef = R"(([+-]?(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?))";
    static const std::regex full("^" + num + "([+-].*)i$"), imag("^" + coef + "i$"), real("^" + num + "$");
    auto coefficient = [](const std::string& c) {
        return c.empty() || c == "+" ? 1.0 : c == "-" ? -1.0 : std::stod(c);
    };
    std::smatch m, im;
    try {
        if (std::regex_match(s, m, real)) return {std::stod(m[1]), 0.0};
        if (std::regex_match(s, m, imag)) return {0.0, coefficient(m[1].str())};
        if (std::regex_match(s, m, full)) {
            const std::string tail = m[2].str() + "i";
            if (std::regex_match(tail, im, imag)) return {std::stod(m[1]), coefficient(im[1].str())};
        }
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::invalid_argument, "cannot parse complex number '" + text + "'");
}

std::vector<int> parse_levels(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    try {
        while (std::getline(ss, item, ':')) parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_argument, "cannot parse levels '" + s + "'");
    }
    if (parts.empty() || parts.size() > 3)
        throw Error(ErrorCode::invalid_argument, "levels must be a, a:b or a:b:s");
    int from = parts[0], to = parts.size() > 1 ? parts[1] : parts[0], step = parts.size() > 2 ? parts[2] : 1;
    if (step <= 0 || from > to) throw Error(ErrorCode::invalid_argument, "empty level range '" + s + "'");
    std::vector<int> out;
    for (int k = from; k <= to; k += step) out.push_back(k);
    return out;
}

namespace {

json rational_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json matrix_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        a.push_back(r);
    }
    return a;
}

json sl2_json(const SL2& A) { return json::array({json::array({A.a, A.b}), json::array({A.c, A.d})}); }

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

json rep_json(const RepMatrix& r) {
    json re = json::array(), im = json::array(), idx = json::array();
    for (Eigen::Index i = 0; i < r.entries.rows(); ++i) {
        json a = json::array(), b = json::array();
        for (Eigen::Index j = 0; j < r.entries.cols(); ++j) {
            a.push_back(r.entries(i, j).real());
            b.push_back(r.entries(i, j).imag());
        }
        re.push_back(a);
        im.push_back(b);
    }
    for (const auto& w : *r.index) idx.push_back(w.admissible_form);
    return {{"group", r.meta.group}, {"level", r.meta.level}, {"norm", to_string(r.meta.norm)},
            {"index", idx},          {"re", re},             {"im", im}};
}

json weights_json(const RootSystem& rs, int k) {
    json ws = json::array();
    for (const auto& w : admissible_weights(rs, k))
        ws.push_back({{"labels", w.admissible_form}, {"lambda", rational_json(w.lambda)}});
    return {{"group", rs.name()}, {"level", k}, {"weights", ws}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::invalid_argument, path + ": " + e.what());
    }
}

template <class T>
T field(const json& j, const char* key, const std::string& path) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::invalid_argument, path + ": missing or malformed field '" + key + "'");
    }
}

double matrix_gap(const json& a, const json& b) {
    if (a.size() != b.size()) return INFINITY;
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return INFINITY;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            d = std::max(d, std::abs(a[i][j].get<double>() - b[i][j].get<double>()));
    }
    return d;
}

SL2 parse_matrix(const std::string& s) {
    std::string t = s;
    std::replace_if(t.begin(), t.end(), [](char c) { return c == ',' || c == '[' || c == ']' || c == ';'; }, ' ');
    std::stringstream ss(t);
    long long a, b, c, d;
    if (!(ss >> a >> b >> c >> d)) throw Error(ErrorCode::invalid_argument, "matrix needs four integers");
    SL2 A{a, b, c, d};
    if (a * d - b * c != 1) throw Error(ErrorCode::invalid_word, "matrix is not in SL(2,Z)");
    return A;
}

std::string csv_number(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

struct Options {
    std::string group, word, norm = "geometric", ext, from_file, matrix, levels, check = "norms";
    std::string tau = "0+1i", tau2, filter, dir, prefactor = "i^ind", point = "0.3,0.1";
    int level = 0, weyl_index = -1;
    std::uint64_t seed = 1;
    bool write_golden = false;
};

Extension trace_extension(const Options& o, const RootSystem& rs) {
    return o.ext.empty() ? default_trace_extension(rs) : parse_extension(o.ext);
}

json cmd_info(const Options& o) {
    RootSystem rs = parse_group(o.group);
    Integer order = weyl_group_order(rs);
    json wo = order <= Integer(1LL << 53) ? json(static_cast<long long>(order)) : json(to_string(order));
    return {{"group", rs.name()},
            {"rank", rs.rank},
            {"h_dual", rs.dual_coxeter},
            {"dim", rs.dim_g},
            {"weyl_order", wo},
            {"num_positive_roots", rs.num_pos_roots},
            {"cartan_matrix", matrix_json(rs.cartan_matrix)},
            {"gram", matrix_json(rs.gram)},
            {"comarks", rs.comarks},
            {"symmetrizer", rs.symmetrizer}};
}

json cmd_weights(const Options& o) {
    if (!o.from_file.empty()) {
        json in = read_json_file(o.from_file);
        RootSystem rs = parse_group(field<std::string>(in, "group", o.from_file));
        json j = weights_json(rs, field<int>(in, "level", o.from_file));
        if (in.value("weights", json()) != j["weights"])
            throw Error(ErrorCode::invalid_argument, o.from_file + ": weights differ from recomputation");
        return j;
    }
    return weights_json(parse_group(o.group), o.level);
}

json cmd_matrix(const Options& o, bool is_s) {
    std::string group = o.group, norm = o.norm;
    int level = o.level;
    json in;
    if (!o.from_file.empty()) {
        in = read_json_file(o.from_file);
        group = field<std::string>(in, "group", o.from_file);
        level = field<int>(in, "level", o.from_file);
        norm = field<std::string>(in, "norm", o.from_file);
    }
    RootSystem rs = parse_group(group);
    Normalization n = parse_normalization(norm);
    json j = rep_json(is_s ? s_matrix(rs, level, n) : t_matrix(rs, level, n));
    if (!in.is_null()) {
        double gap = std::max(matrix_gap(in.value("re", json::array()), j["re"]),
                              matrix_gap(in.value("im", json::array()), j["im"]));
        if (in.value("index", json()) != j["index"] || !(gap <= 1e-12))
            throw Error(ErrorCode::invalid_argument, o.from_file + ": entries differ from recomputation");
    }
    return j;
}

json cmd_word(const Options& o) {
    if (o.word.empty() == o.matrix.empty())
        throw Error(ErrorCode::invalid_argument, "give exactly one of --word and --matrix");
    ModularWord w = o.word.empty() ? sl2_to_word(parse_matrix(o.matrix)) : ModularWord::parse(o.word);
    SL2 A = w.matrix();
    json j = {{"word", w.str()},
              {"matrix", sl2_json(A)},
              {"trace", A.trace()},
              {"canonical_word", sl2_to_word(A).str()}};
    if (!o.group.empty()) {
        RootSystem rs = parse_group(o.group);
        Extension ext = o.ext.empty() ? Extension::m2 : parse_extension(o.ext);
        QuantumSpace qs(rs, o.level);
        RepMatrix r = represent(w, qs, ext);
        j["representation"] = rep_json(r);
        j["extension"] = to_string(ext);
    }
    return j;
}

json cmd_trace(const Options& o) {
    RootSystem rs = parse_group(o.group);
    ModularWord w = ModularWord::parse(o.word);
    Extension ext = trace_extension(o, rs);
    return {{"group", rs.name()},
            {"level", o.level},
            {"word", w.str()},
            {"extension", to_string(ext)},
            {"trace", complex_json(exact_trace(w, rs, o.level, ext))}};
}

json cmd_fixed_points(const Options& o) {
    RootSystem rs = parse_group(o.group);
    SL2 A = ModularWord::parse(o.word).matrix();
    auto weyl = weyl_elements(rs);
    json out = json::array();
    for (std::size_t i = 0; i < weyl.size(); ++i) {
        if (o.weyl_index >= 0 && static_cast<std::size_t>(o.weyl_index) != i) continue;
        for (const auto& f : fixed_points(A, weyl[i], rs)) {
            json gm = json::array();
            for (const auto& v : f.gamma_mu) gm.push_back(to_string(v));
            out.push_back({{"weyl_index", i},
                           {"point", rational_json(f.point.coords)},
                           {"gamma_mu", gm},
                           {"theta_over_pi", to_string(f.theta_over_pi)}});
        }
    }
    if (o.weyl_index >= static_cast<int>(weyl.size()))
        throw Error(ErrorCode::invalid_argument, "Weyl index out of range");
    return out;
}

json cmd_index(const Options& o) {
    RootSystem rs = parse_group(o.group);
    ModularWord w = ModularWord::parse(o.word);
    M2Element x = m2_from_word(w, rs.rank);
    return {{"group", rs.name()},
            {"word", w.str()},
            {"matrix", sl2_json(x.A)},
            {"branch", x.branch},
            {"epsilon", epsilon_of(x.A)},
            {"index", metaplectic_index(x, rs)}};
}

std::string cmd_asympt(const Options& o) {
    RootSystem rs = parse_group(o.group);
    ModularWord w = ModularWord::parse(o.word);
    std::vector<int> ks = parse_levels(o.levels);
    int step = ks.size() > 1 ? ks[1] - ks[0] : 1;
    Extension ext = trace_extension(o, rs);
    Arbitration arb = arbitrate_prefactor(w, rs, ks.front(), ks.back(), step, ext);
    Prefactor want = o.prefactor == "unit" ? Prefactor::unit : Prefactor::maslov_index;
    if (o.prefactor != "unit" && o.prefactor != "i^ind")
        throw Error(ErrorCode::invalid_argument, "prefactor must be i^ind or unit");
    const ConvergenceStudy* st = nullptr;
    for (const auto& s : arb.studies)
        if (s.prefactor == want) st = &s;
    std::ostringstream os;
    os << "k,exact_re,exact_im,asymptotic_re,asymptotic_im,abs_error,k_abs_error\n";
    for (const auto& e : st->entries)
        os << e.k << ',' << csv_number(e.exact.real()) << ',' << csv_number(e.exact.imag()) << ','
           << csv_number(e.asymptotic.real()) << ',' << csv_number(e.asymptotic.imag()) << ','
           << csv_number(e.abs_error) << ',' << csv_number(e.k * e.abs_error) << '\n';
    for (const auto& s : arb.studies) {
        os << "# prefactor=" << to_string(s.prefactor) << " slope="
           << (s.slope ? csv_number(*s.slope) : "none") << " ci95="
           << (s.slope_ci ? csv_number(*s.slope_ci) : "none") << " fit_points=" << s.fit_points
           << " at_noise_floor=" << (s.at_noise_floor ? "true" : "false")
           << " max_k_abs_error=" << csv_number(s.max_scaled_error)
           << " k_error_bounded=" << (s.scaled_error_bounded ? "true" : "false")
           << " passes=" << (s.decays() ? "true" : "false") << '\n';
    }
    os << "# index=" << st->entries.front().index << " candidates_coincide="
       << (arb.candidates_coincide ? "true" : "false")
       << " selected=" << (arb.selected ? to_string(*arb.selected) : "none") << '\n';
    return os.str();
}

json cmd_theta(const Options& o) {
    RootSystem rs = parse_group(o.group);
    cd tau = parse_complex(o.tau);
    cd tau2 = o.tau2.empty() ? tau : parse_complex(o.tau2);
    json j = {{"group", rs.name()}, {"level", o.level}, {"tau", complex_json(tau)},
              {"check", o.check},   {"seed", o.seed}};
    if (o.check == "norms") {
        ThetaParams P = make_theta_params(rs, o.level, tau);
        QuadratureResult q = section_gram(P);
        double formula = section_norm2_formula(rs, o.level, tau), rel = 0, off = 0;
        json norms = json::array();
        for (Eigen::Index a = 0; a < q.gram.rows(); ++a) {
            norms.push_back(q.gram(a, a).real());
            rel = std::max(rel, std::abs(q.gram(a, a).real() - formula) / formula);
            for (Eigen::Index b = 0; b < q.gram.cols(); ++b)
                if (a != b) off = std::max(off, std::abs(q.gram(a, b)));
        }
        j["formula"] = formula;
        j["norms"] = norms;
        j["max_relative_error"] = rel;
        j["max_off_diagonal"] = off;
        j["points_per_axis"] = q.points_per_axis;
    } else if (o.check == "modular") {
        ThetaParams P = make_theta_params(rs, o.level, tau);
        j["S"] = verify_modular_action(P, ThetaCheck::S, 50, o.seed);
        j["T"] = verify_modular_action(P, ThetaCheck::T, 50, o.seed);
        if (o.level >= rs.dual_coxeter)
            j["alternating_S"] = verify_modular_action(P, ThetaCheck::alternating_S, 50, o.seed);
    } else if (o.check == "kernel") {
        std::vector<int> ks = o.levels.empty() ? parse_levels("5:40") : parse_levels(o.levels);
        KernelReport r = kernel_check(rs, ks, tau, tau2, 8, o.seed);
        j["tau2"] = complex_json(tau2);
        j["levels"] = r.levels;
        j["diagonal_error"] = r.diagonal_error;
        j["off_diagonal"] = r.off_diagonal;
        j["poisson_error"] = r.poisson_error;
        j["diagonal_slope"] = r.diagonal_slope ? json(*r.diagonal_slope) : json();
        j["decay_rate"] = r.decay_rate ? json(*r.decay_rate) : json();
        j["diagonal_decays"] = r.diagonal_decays();
    } else if (o.check == "poisson") {
        std::vector<double> pq;
        std::stringstream ss(o.point);
        std::string item;
        while (std::getline(ss, item, ',')) pq.push_back(std::stod(item));
        const std::size_t n = rs.rank;
        if (pq.size() != 2 * n)
            throw Error(ErrorCode::dimension_mismatch, "--point needs 2 * rank coordinates");
        Vec p(pq.begin(), pq.begin() + n), q(pq.begin() + n, pq.end());
        PoissonCheck c = poisson_check(rs, o.level, tau, tau2, p, q, p, q);
        j["tau2"] = complex_json(tau2);
        j["theta_side"] = complex_json(c.theta_side);
        j["poisson_side"] = complex_json(c.poisson_side);
        j["relative_error"] = c.relative_error;
    } else {
        throw Error(ErrorCode::invalid_argument, "unknown theta check '" + o.check + "'");
    }
    return j;
}

void emit_error(std::ostream& err, ErrorCode code, const std::string& msg) {
    json e = {{"error", error_name(code)}, {"code", static_cast<int>(code)}, {"message", msg}};
    err << e.dump() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum representations of the modular group for the torus"};
    app.require_subcommand(1);
    Options o;
    std::string out_path;
    app.add_option("--out", out_path, "Write the result to this file")->type_name("PATH");
    app.add_option("--seed", o.seed, "Seed for randomized checks");

    auto group = [&](CLI::App* s, bool required = true) {
        auto* opt = s->add_option("--group", o.group, "Simple type, e.g. A2");
        if (required) opt->required();
    };
    auto level = [&](CLI::App* s) { s->add_option("--level", o.level, "Level k"); };

    auto* info = app.add_subcommand("info", "Root system data");
    group(info);
    auto* weights = app.add_subcommand("weights", "Admissible weights at level k");
    group(weights, false);
    level(weights);
    weights->add_option("--from-file", o.from_file, "Re-ingest a weights JSON file");
    auto* smat = app.add_subcommand("smatrix", "S matrix");
    auto* tmat = app.add_subcommand("tmatrix", "T matrix");
    for (auto* s : {smat, tmat}) {
        group(s, false);
        level(s);
        s->add_option("--norm", o.norm, "geometric or fusion");
        s->add_option("--from-file", o.from_file, "Re-ingest a matrix JSON file");
    }
    auto* word = app.add_subcommand("word", "Word, matrix and representation");
    word->add_option("--word", o.word, "Word in S, T, G, -");
    word->add_option("--matrix", o.matrix, "Matrix a,b,c,d");
    group(word, false);
    level(word);
    word->add_option("--ext", o.ext, "m2, ev, odd or inf");
    auto* trace = app.add_subcommand("trace", "Exact character");
    group(trace);
    level(trace);
    trace->add_option("--word", o.word)->required();
    trace->add_option("--ext", o.ext, "m2, ev, odd or inf");
    auto* fps = app.add_subcommand("fixed-points", "Fixed points and Chern-Simons phases");
    group(fps);
    fps->add_option("--word", o.word)->required();
    fps->add_option("--weyl-index", o.weyl_index);
    auto* index = app.add_subcommand("index", "Metaplectic index");
    group(index);
    index->add_option("--word", o.word)->required();
    auto* asympt = app.add_subcommand("asympt", "Trace asymptotics study as CSV");
    group(asympt);
    asympt->add_option("--word", o.word)->required();
    asympt->add_option("--levels", o.levels, "a:b:s")->required();
    asympt->add_option("--ext", o.ext, "ev or odd");
    asympt->add_option("--prefactor", o.prefactor, "i^ind or unit");
    auto* theta = app.add_subcommand("theta", "Theta function checks");
    group(theta);
    level(theta);
    theta->add_option("--check", o.check, "norms, modular, kernel or poisson");
    theta->add_option("--tau", o.tau);
    theta->add_option("--tau2", o.tau2);
    theta->add_option("--levels", o.levels, "level grid for the kernel check");
    theta->add_option("--point", o.point, "p,q for the Poisson check");
    auto* corpus = app.add_subcommand("corpus", "Regression corpus");
    corpus->require_subcommand(1);
    auto* crun = corpus->add_subcommand("run", "Run the corpus");
    crun->add_option("--filter", o.filter, "id glob");
    crun->add_option("--dir", o.dir, "corpus directory");
    crun->add_flag("--write-golden", o.write_golden, "Regenerate golden files");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(err, ErrorCode::invalid_argument, e.what());
        return static_cast<int>(ErrorCode::invalid_argument);
    }

    auto need = [&](bool group_needed, bool level_needed) {
        if (group_needed && o.group.empty()) throw Error(ErrorCode::invalid_argument, "--group is required");
        if (level_needed && o.level <= 0) throw Error(ErrorCode::invalid_level, "--level is required");
    };

    std::string text;
    int code = 0;
    try {
        if (info->parsed()) {
            text = cmd_info(o).dump(2);
        } else if (weights->parsed()) {
            if (o.from_file.empty()) need(true, true);
            text = cmd_weights(o).dump(2);
        } else if (smat->parsed() || tmat->parsed()) {
            if (o.from_file.empty()) need(true, true);
            text = cmd_matrix(o, smat->parsed()).dump(2);
        } else if (word->parsed()) {
            if (!o.group.empty()) need(true, true);
            text = cmd_word(o).dump(2);
        } else if (trace->parsed()) {
            need(true, true);
            text = cmd_trace(o).dump(2);
        } else if (fps->parsed()) {
            text = cmd_fixed_points(o).dump(2);
        } else if (index->parsed()) {
            text = cmd_index(o).dump(2);
        } else if (asympt->parsed()) {
            text = cmd_asympt(o);
        } else if (theta->parsed()) {
            need(true, o.check != "kernel");
            text = cmd_theta(o).dump(2);
        } else if (crun->parsed()) {
            CorpusReport r = o.dir.empty() ? run_corpus(o.filter, default_corpus_dir(), o.write_golden)
                                           : run_corpus(o.filter, o.dir, o.write_golden);
            text = r.to_json().dump(2);
            if (!r.passed()) {
                emit_error(err, ErrorCode::corpus_error, "corpus checks failed");
                code = static_cast<int>(ErrorCode::corpus_error);
            }
        }
    } catch (const Error& e) {
        emit_error(err, e.code(), e.what());
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        err << json{{"error", "internal"}, {"code", 1}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    if (!text.empty() && text.back() != '\n') text += '\n';
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            emit_error(err, ErrorCode::io_error, "cannot write " + out_path);
            return static_cast<int>(ErrorCode::io_error);
        }
        f << text;
    }
    return code;
}

} // namespace wrt
