#include "wrt/semiclassics.hpp"
#include "wrt/errors.hpp"
#include "wrt/maslov.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>

namespace wrt {

std::string to_string(Prefactor p) { return p == Prefactor::maslov_index ? "i^ind" : "unit"; }

Extension default_trace_extension(const RootSystem& rs) {
    return rs.rank % 2 == 0 ? Extension::ev : Extension::odd;
}

cd exact_trace(const ModularWord& w, const RootSystem& rs, int k, Extension ext) {
    QuantumSpace qs(rs, k);
    return plan_trace(qs, plan_word(w, rs, k, ext));
}

AsymptoticModel::AsymptoticModel(const ModularWord& w, const RootSystem& rs, Extension ext)
    : A_(w.matrix()) {
    if (std::llabs(A_.trace()) <= 2)
        throw Error(ErrorCode::non_hyperbolic,
                    "asymptotics need a hyperbolic matrix, word gives " + to_string(A_));
    if (ext == Extension::inf)
        throw Error(ErrorCode::invalid_argument, "trace asymptotics are stated for M2 lifts");
    plan_word(w, rs, rs.dual_coxeter, ext);
    lift_ = m2_from_word(w, rs.rank);
    index_ = metaplectic_index(lift_, rs);
    for (const auto& wel : weyl_elements(rs)) {
        Block b{wel.sign, det_factor(A_, wel, rs), {}};
        for (const auto& fp : fixed_points(A_, wel, rs)) b.thetas.push_back(fp.theta_over_pi);
        blocks_.push_back(std::move(b));
    }
}

cd AsymptoticModel::evaluate(int k, Prefactor pref, std::vector<TraceTerm>* terms) const {
    CompensatedSum total;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const Block& b = blocks_[i];
        CompensatedSum s;
        for (const auto& th : b.thetas) s.add(cs_exponential(th, k));
        cd partial = double(b.sign) * s.value() / b.det_factor;
        if (terms) terms->push_back({i, b.thetas.size(), partial});
        total.add(partial);
    }
    cd p = pref == Prefactor::maslov_index ? std::pow(cd(0, 1), index_) : cd(1, 0);
    return p * total.value() / double(blocks_.size());
}

cd asymptotic_trace(const ModularWord& w, const RootSystem& rs, int k, Extension ext, Prefactor pref) {
    return AsymptoticModel(w, rs, ext).evaluate(k, pref);
}

TraceReport trace_report(const ModularWord& w, const RootSystem& rs, int k, Extension ext,
                         Prefactor pref) {
    AsymptoticModel model(w, rs, ext);
    TraceReport r;
    r.k = k;
    r.exact = exact_trace(w, rs, k, ext);
    r.asymptotic = model.evaluate(k, pref, &r.per_term);
    r.abs_error = std::abs(r.exact - r.asymptotic);
    r.index = pref == Prefactor::maslov_index ? model.index() : 0;
    return r;
}

bool ConvergenceStudy::decays(double bound) const {
    if (!scaled_error_bounded) return false;
    if (at_noise_floor) return true;
    return slope && *slope <= bound;
}

ConvergenceStudy study_from_reports(std::vector<TraceReport> entries, Prefactor pref) {
    ConvergenceStudy st;
    st.prefactor = pref;
    st.entries = std::move(entries);
    std::vector<double> xs, ys;
    for (const auto& e : st.entries) {
        st.max_scaled_error = std::max(st.max_scaled_error, e.k * e.abs_error);
        if (e.abs_error > noise_floor) {
            xs.push_back(std::log(double(e.k)));
            ys.push_back(std::log(e.abs_error));
        }
    }
    st.fit_points = xs.size();
    st.at_noise_floor = xs.empty() && !st.entries.empty();
    if (xs.size() >= 3) {
        const double m = double(xs.size());
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i] / m;
            my += ys[i] / m;
        }
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        if (sxx > 0) {
            double b = sxy / sxx;
            double sse = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                double r = ys[i] - (my + b * (xs[i] - mx));
                sse += r * r;
            }
            st.slope = b;
            if (xs.size() > 2) {
                boost::math::students_t dist(m - 2);
                double tq = boost::math::quantile(boost::math::complement(dist, 0.025));
                st.slope_ci = tq * std::sqrt(sse / (m - 2) / sxx);
            }
        }
    }
    // k|err| must not grow: compare the two halves of the window
    const std::size_t half = st.entries.size() / 2;
    double first = 0, second = 0;
    for (std::size_t i = 0; i < st.entries.size(); ++i) {
        double v = st.entries[i].k * st.entries[i].abs_error;
        if (i < half) first = std::max(first, v);
        else second = std::max(second, v);
    }
    double kmax = st.entries.empty() ? 0.0 : double(st.entries.back().k);
    st.scaled_error_bounded = second <= std::max(2.0 * first, 10.0 * noise_floor * kmax);
    return st;
}

ConvergenceStudy convergence_study(const ModularWord& w, const RootSystem& rs, int k_min, int k_max,
                                   int step, Extension ext, Prefactor pref) {
    Arbitration arb = arbitrate_prefactor(w, rs, k_min, k_max, step, ext);
    for (auto& s : arb.studies)
        if (s.prefactor == pref) return s;
    return arb.studies.front();
}

Arbitration arbitrate_prefactor(const ModularWord& w, const RootSystem& rs, int k_min, int k_max,
                                int step, Extension ext) {
    if (step <= 0 || k_min > k_max)
        throw Error(ErrorCode::invalid_argument, "empty level grid");
    if (k_min < rs.dual_coxeter)
        throw Error(ErrorCode::invalid_level, "grid starts below the dual Coxeter number");
    AsymptoticModel model(w, rs, ext);
    std::vector<int> ks;
    for (int k = k_min; k <= k_max; k += step) ks.push_back(k);
    std::vector<cd> exact(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) exact[i] = exact_trace(w, rs, ks[i], ext);

    Arbitration arb;
    for (Prefactor p : {Prefactor::maslov_index, Prefactor::unit}) {
        std::vector<TraceReport> reps;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            TraceReport r;
            r.k = ks[i];
            r.exact = exact[i];
            r.asymptotic = model.evaluate(ks[i], p, &r.per_term);
            r.abs_error = std::abs(r.exact - r.asymptotic);
            r.index = p == Prefactor::maslov_index ? model.index() : 0;
            reps.push_back(std::move(r));
        }
        arb.studies.push_back(study_from_reports(std::move(reps), p));
    }
    arb.candidates_coincide = model.index() % 4 == 0;
    for (const auto& s : arb.studies)
        if (s.decays()) arb.passing.push_back(s.prefactor);
    if (arb.passing.size() == 1) arb.selected = arb.passing.front();
    return arb;
}

} // namespace wrt
