#include "wrt/modrep.hpp"
#include "wrt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace wrt {

std::string to_string(Normalization n) {
    return n == Normalization::geometric ? "geometric" : "fusion";
}

std::string to_string(Extension e) {
    switch (e) {
    case Extension::none: return "none";
    case Extension::m2: return "m2";
    case Extension::ev: return "ev";
    case Extension::odd: return "odd";
    case Extension::inf: return "inf";
    }
    return "none";
}

Normalization parse_normalization(const std::string& s) {
    if (s == "geometric") return Normalization::geometric;
    if (s == "fusion") return Normalization::fusion;
    throw Error(ErrorCode::invalid_argument, "unknown normalization '" + s + "'");
}

Extension parse_extension(const std::string& s) {
    for (Extension e : {Extension::none, Extension::m2, Extension::ev, Extension::odd, Extension::inf})
        if (to_string(e) == s) return e;
    throw Error(ErrorCode::invalid_argument, "unknown extension '" + s + "'");
}

CentralCharge central_charge(const RootSystem& rs, int k) {
    return {Rational(k - rs.dual_coxeter) * rs.dim_g / k, Rational(rs.dual_coxeter) * rs.dim_g / k};
}

QuantumSpace::QuantumSpace(const RootSystem& rs, int k, std::size_t weyl_guard)
    : rs_(rs), k_(k),
      index_(std::make_shared<const std::vector<WeightIndex>>(admissible_weights(rs, k))),
      weyl_(weyl_elements(rs, weyl_guard)), phases_(2LL * k * rs.gram_det),
      gauss_prefactor_(std::pow(double(k), -0.5 * rs.rank) / std::sqrt(double(rs.gram_det))) {
    const int n = rs.rank;
    for (const auto& w : weyl_) weyl_adj_.push_back(w.matrix * rs.gram_adjugate);
    for (const auto& wi : *index_) {
        IntVec a(n), m2(n);
        for (int i = 0; i < n; ++i) {
            a[i] = wi.admissible_form[i] + 1;
            m2[i] = wi.admissible_form[i] + 2;
        }
        long long geo = 0, fus = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                geo += a[i] * rs.gram_adjugate(i, j) * a[j];
                fus += wi.admissible_form[i] * rs.gram_adjugate(i, j) * m2[j];
            }
        t_geo_.push_back(geo);
        t_fus_.push_back(fus);
        shifted_.push_back(std::move(a));
    }
}

void QuantumSpace::weyl_row(std::size_t i, std::size_t j0, std::vector<cd>& out) const {
    const int n = rs_.rank;
    const std::size_t N = dimension();
    const std::size_t nw = weyl_.size();
    std::vector<long long> u(nw * n, 0);
    const IntVec& a = shifted_[i];
    for (std::size_t w = 0; w < nw; ++w)
        for (int c = 0; c < n; ++c) {
            long long s = 0;
            for (int r = 0; r < n; ++r) s += a[r] * weyl_adj_[w](r, c);
            u[w * n + c] = -2 * s;
        }
    out.resize(N - j0);
    for (std::size_t j = j0; j < N; ++j) {
        const IntVec& b = shifted_[j];
        CompensatedSum acc;
        for (std::size_t w = 0; w < nw; ++w) {
            long long e = 0;
            for (int c = 0; c < n; ++c) e += u[w * n + c] * b[c];
            const cd& z = phases_(e);
            acc.add(weyl_[w].sign > 0 ? z : -z);
        }
        out[j - j0] = acc.value();
    }
}

cd QuantumSpace::weyl_sum(std::size_t i, std::size_t j) const {
    std::vector<cd> row;
    weyl_row(i, j, row);
    return row[0];
}

Eigen::MatrixXcd QuantumSpace::gauss_matrix() const {
    const std::size_t N = dimension();
    Eigen::MatrixXcd g(N, N);
    parallel_for(N, [&](std::size_t i) {
        std::vector<cd> row;
        weyl_row(i, i, row);
        for (std::size_t j = i; j < N; ++j) {
            cd v = gauss_prefactor_ * row[j - i];
            g(i, j) = v;
            g(j, i) = v;
        }
    });
    return g;
}

Eigen::VectorXcd QuantumSpace::t_diagonal(Normalization norm, long long power) const {
    const auto& src = norm == Normalization::geometric ? t_geo_ : t_fus_;
    const long long mod = phases_.modulus();
    const long long p = ((power % mod) + mod) % mod;
    Eigen::VectorXcd t(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        long long base = ((src[i] % mod) + mod) % mod;
        t(i) = phases_(static_cast<long long>((static_cast<__int128>(base) * p) % mod));
    }
    return t;
}

namespace {

RepMatrix wrap(const QuantumSpace& qs, Eigen::MatrixXcd m, Normalization norm, Extension ext) {
    RepMatrix r;
    r.entries = std::move(m);
    r.index = qs.index();
    r.meta = {qs.root_system().name(), qs.level(), norm, ext};
    return r;
}

// exponent r with (S scalar) = exp(i pi r), geometric basis
Rational geometric_s_phase(const RootSystem& rs) { return Rational(-rs.rank, 4); }

void require_strict_level(const RootSystem& rs, int k) {
    if (k <= rs.dual_coxeter)
        throw Error(ErrorCode::invalid_level, "M-infinity requires a level above " +
                                                  std::to_string(rs.dual_coxeter));
}

} // namespace

RepMatrix t_matrix(const QuantumSpace& qs, Normalization norm) {
    return wrap(qs, qs.t_diagonal(norm).asDiagonal().toDenseMatrix(), norm, Extension::none);
}

RepMatrix s_matrix(const QuantumSpace& qs, Normalization norm) {
    const RootSystem& rs = qs.root_system();
    Rational r = norm == Normalization::geometric ? Rational(-(rs.rank / 2), 2)
                                                  : Rational(rs.num_pos_roots, 2);
    return wrap(qs, cis_pi(r) * qs.gauss_matrix(), norm, Extension::none);
}

RepMatrix t_matrix(const RootSystem& rs, int k, Normalization norm) {
    return t_matrix(QuantumSpace(rs, k), norm);
}

RepMatrix s_matrix(const RootSystem& rs, int k, Normalization norm) {
    return s_matrix(QuantumSpace(rs, k), norm);
}

WordPlan plan_word(const ModularWord& w, const RootSystem& rs, int k, Extension ext) {
    if (ext == Extension::none) ext = Extension::m2;
    WordPlan plan;
    plan.ext = ext;
    plan.basis = ext == Extension::inf ? Normalization::fusion : Normalization::geometric;
    if (ext == Extension::ev && rs.rank % 2 != 0)
        throw Error(ErrorCode::wrong_parity, "R_ev needs even rank, " + rs.name() + " has odd rank");
    if (ext == Extension::odd && rs.rank % 2 == 0)
        throw Error(ErrorCode::wrong_parity, "R_odd needs odd rank, " + rs.name() + " has even rank");
    if (ext == Extension::inf) require_strict_level(rs, k);

    Rational s_phase, g_phase = 0;
    if (ext == Extension::inf) {
        CentralCharge cc = central_charge(rs, k);
        s_phase = -cc.c / 4 + Rational(rs.num_pos_roots, 2);
        g_phase = cc.c / 2;
    } else {
        s_phase = geometric_s_phase(rs);
    }

    Rational total = 0;
    for (const auto& l : w.letters()) {
        switch (l.gen) {
        case Letter::Minus:
            if (ext == Extension::ev || ext == Extension::inf)
                throw Error(ErrorCode::invalid_word, "'-' is not available in " + to_string(ext));
            total += 1;
            break;
        case Letter::Gamma:
            if (ext != Extension::inf)
                throw Error(ErrorCode::invalid_word, "G is only available in inf");
            total += g_phase * l.exp;
            break;
        case Letter::T:
            if (!plan.steps.empty() && !plan.steps.back().is_s) plan.steps.back().t_power += l.exp;
            else plan.steps.push_back({false, 1, l.exp});
            break;
        case Letter::S: {
            int sgn = l.exp > 0 ? 1 : -1;
            for (long long i = 0; i < std::llabs(l.exp); ++i) plan.steps.push_back({true, sgn, 0});
            total += s_phase * l.exp;
            break;
        }
        }
    }
    plan.scalar = cis_pi(total);
    return plan;
}

Eigen::MatrixXcd evaluate_plan(const QuantumSpace& qs, const WordPlan& plan) {
    const std::size_t N = qs.dimension();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(N, N);
    Eigen::MatrixXcd g;
    for (const auto& st : plan.steps) {
        if (st.is_s) {
            if (g.size() == 0) g = qs.gauss_matrix();
            m = st.s_power > 0 ? Eigen::MatrixXcd(m * g) : Eigen::MatrixXcd(m * g.adjoint());
        } else {
            m = m * qs.t_diagonal(plan.basis, st.t_power).asDiagonal();
        }
    }
    return plan.scalar * m;
}

cd plan_trace(const QuantumSpace& qs, const WordPlan& plan, std::size_t dense_limit) {
    const std::size_t N = qs.dimension();
    std::vector<WordStep> steps = plan.steps;
    std::size_t ns = std::count_if(steps.begin(), steps.end(), [](const WordStep& s) { return s.is_s; });
    if (ns > 2) {
        if (N > dense_limit)
            throw Error(ErrorCode::size_guard, "dense trace of dimension " + std::to_string(N) +
                                                   " exceeds limit " + std::to_string(dense_limit));
        return evaluate_plan(qs, plan).trace();
    }
    if (ns >= 1) {
        auto first = std::find_if(steps.begin(), steps.end(), [](const WordStep& s) { return s.is_s; });
        std::rotate(steps.begin(), first, steps.end());
    }
    // diagonal exponents following each S (or the only diagonal when ns == 0)
    std::vector<int> spow;
    std::vector<long long> tpow;
    long long pending = 0;
    for (const auto& s : steps) {
        if (s.is_s) {
            if (!spow.empty()) tpow.push_back(pending);
            spow.push_back(s.s_power);
            pending = 0;
        } else {
            pending += s.t_power;
        }
    }
    tpow.push_back(pending);

    const double pref = qs.gauss_prefactor();
    if (ns == 0) {
        Eigen::VectorXcd d = qs.t_diagonal(plan.basis, tpow[0]);
        CompensatedSum acc;
        for (std::size_t i = 0; i < N; ++i) acc.add(d(i));
        return plan.scalar * acc.value();
    }
    if (ns == 1) {
        Eigen::VectorXcd d = qs.t_diagonal(plan.basis, tpow[0]);
        std::vector<cd> diag(N);
        parallel_for(N, [&](std::size_t i) {
            cd g = qs.weyl_sum(i, i);
            diag[i] = (spow[0] > 0 ? g : std::conj(g)) * d(i);
        });
        CompensatedSum acc;
        for (const cd& v : diag) acc.add(v);
        return plan.scalar * pref * acc.value();
    }
    // trace(X D2 Y D1) = sum_ij D1_i X_ij D2_j Y_ij for symmetric X, Y
    Eigen::VectorXcd d2 = qs.t_diagonal(plan.basis, tpow[0]);
    Eigen::VectorXcd d1 = qs.t_diagonal(plan.basis, tpow[1]);
    const int a = spow[0], b = spow[1];
    std::vector<cd> rows(N);
    parallel_for(N, [&](std::size_t i) {
        std::vector<cd> row;
        qs.weyl_row(i, i, row);
        CompensatedSum acc;
        for (std::size_t j = i; j < N; ++j) {
            const cd& g = row[j - i];
            cd f = a == b ? (a > 0 ? g * g : std::conj(g * g)) : std::norm(g);
            cd w = j == i ? d1(i) * d2(i) : d1(i) * d2(j) + d1(j) * d2(i);
            acc.add(f * w);
        }
        rows[i] = acc.value();
    });
    CompensatedSum acc;
    for (const cd& v : rows) acc.add(v);
    return plan.scalar * pref * pref * acc.value();
}

RepMatrix represent(const ModularWord& w, const QuantumSpace& qs, Extension ext) {
    WordPlan plan = plan_word(w, qs.root_system(), qs.level(), ext);
    return wrap(qs, evaluate_plan(qs, plan), plan.basis, plan.ext);
}

RepMatrix r2alt(const ModularWord& w, const RootSystem& rs, int k) {
    return represent(w, QuantumSpace(rs, k), Extension::m2);
}

RepMatrix r2alt(const M2Element& x, const RootSystem& rs, int k) {
    if (x.n != rs.rank)
        throw Error(ErrorCode::invalid_argument, "M2 element built for rank " + std::to_string(x.n) +
                                                     " used with " + rs.name());
    return r2alt(word_for(x), rs, k);
}

RepMatrix r_ev(const ModularWord& w, const RootSystem& rs, int k) {
    return represent(w, QuantumSpace(rs, k), Extension::ev);
}

RepMatrix r_odd(const ModularWord& w, const RootSystem& rs, int k) {
    return represent(w, QuantumSpace(rs, k), Extension::odd);
}

RepMatrix r_odd(const MpElement& x, const RootSystem& rs, int k) {
    return r_odd(word_for(x), rs, k);
}

RepMatrix r_infinity(const ModularWord& w, const RootSystem& rs, int k) {
    return represent(w, QuantumSpace(rs, k), Extension::inf);
}

cd zeta_k(const ModularWord& w, const RootSystem& rs, int k) {
    Rational x = central_charge(rs, k).x_k;
    Rational r = 0;
    for (const auto& l : w.letters()) {
        switch (l.gen) {
        case Letter::S: r += x * l.exp / 4; break;
        case Letter::T: r -= x * l.exp / 12; break;
        case Letter::Gamma: r -= x * l.exp / 2; break;
        case Letter::Minus: throw Error(ErrorCode::invalid_word, "'-' is not an M-infinity letter");
        }
    }
    return cis_pi(r);
}

double ComparisonReport::max() const { return std::max({dev_s, dev_t, dev_gamma}); }

ComparisonReport compare_representations(const RootSystem& rs, int k) {
    require_strict_level(rs, k);
    QuantumSpace qs(rs, k);
    const std::size_t N = qs.dimension();
    auto dev = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
        return (x - y).cwiseAbs().maxCoeff();
    };
    ComparisonReport rep;
    const ModularWord s = ModularWord::parse("S"), t = ModularWord::parse("T"),
                      g = ModularWord::parse("G");
    // Psi(s) = (S, e) with e(i) = exp(-i pi n/4), Psi(t) = (T, 1), Psi(gamma) = (I, i^dim)
    Eigen::MatrixXcd s_tilde = zeta_k(s, rs, k) * represent(s, qs, Extension::m2).entries;
    Eigen::MatrixXcd t_tilde = zeta_k(t, rs, k) * represent(t, qs, Extension::m2).entries;
    Eigen::MatrixXcd g_tilde =
        zeta_k(g, rs, k) * cis_pi(Rational(rs.dim_g, 2)) * Eigen::MatrixXcd::Identity(N, N);
    rep.dev_s = dev(s_tilde, represent(s, qs, Extension::inf).entries);
    rep.dev_t = dev(t_tilde, represent(t, qs, Extension::inf).entries);
    rep.dev_gamma = dev(g_tilde, represent(g, qs, Extension::inf).entries);
    return rep;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
    const auto n = u.rows();
    return (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm();
}

} // namespace wrt
