#pragma once

#include "wrt/fixedpt.hpp"
#include "wrt/modrep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wrt {

// i^ind from the metaplectic index, or the constant (-1)^{2 eps p} = 1
// written in the even-rank statement.
enum class Prefactor { maslov_index, unit };

std::string to_string(Prefactor p);

struct TraceTerm {
    std::size_t weyl_index = 0;
    std::size_t fixed_points = 0;
    cd partial; // sign(w) sum_x e^{ik theta} / |det(I - A (x) w)|^{1/2}
};

struct TraceReport {
    int k = 0;
    cd exact;
    cd asymptotic;
    double abs_error = 0;
    int index = 0;
    std::vector<TraceTerm> per_term;
};

// Representation used for the character: R_odd for odd rank, R_ev for even rank.
Extension default_trace_extension(const RootSystem& rs);

cd exact_trace(const ModularWord& w, const RootSystem& rs, int k, Extension ext);

// Fixed-point data of the word's matrix, independent of k.
class AsymptoticModel {
public:
    AsymptoticModel(const ModularWord& w, const RootSystem& rs, Extension ext);

    cd evaluate(int k, Prefactor pref = Prefactor::maslov_index,
                std::vector<TraceTerm>* terms = nullptr) const;
    int index() const { return index_; }
    const SL2& matrix() const { return A_; }
    const M2Element& lift() const { return lift_; }

private:
    struct Block {
        int sign;
        double det_factor;
        std::vector<Rational> thetas;
    };
    SL2 A_;
    M2Element lift_;
    int index_ = 0;
    std::vector<Block> blocks_;
};

cd asymptotic_trace(const ModularWord& w, const RootSystem& rs, int k, Extension ext,
                    Prefactor pref = Prefactor::maslov_index);

TraceReport trace_report(const ModularWord& w, const RootSystem& rs, int k, Extension ext,
                         Prefactor pref = Prefactor::maslov_index);

constexpr double noise_floor = 1e-12;

struct ConvergenceStudy {
    std::vector<TraceReport> entries;
    Prefactor prefactor = Prefactor::maslov_index;
    std::optional<double> slope;    // least-squares slope of log|err| against log k
    std::optional<double> slope_ci; // 95% half-width
    std::size_t fit_points = 0;     // entries above the noise floor
    bool at_noise_floor = false;    // every error below the noise floor
    double max_scaled_error = 0;    // max k |err|
    bool scaled_error_bounded = false;

    // slope <= bound, or every error at the noise floor
    bool decays(double bound = -0.7) const;
};

ConvergenceStudy convergence_study(const ModularWord& w, const RootSystem& rs, int k_min, int k_max,
                                   int step, Extension ext, Prefactor pref = Prefactor::maslov_index);
ConvergenceStudy study_from_reports(std::vector<TraceReport> entries, Prefactor pref);

struct Arbitration {
    std::vector<ConvergenceStudy> studies; // one per candidate prefactor
    std::vector<Prefactor> passing;
    std::optional<Prefactor> selected;     // set when exactly one candidate passes
    bool candidates_coincide = false;      // both prefactors equal for this word
};

// Runs the study with both prefactors on shared exact traces.
Arbitration arbitrate_prefactor(const ModularWord& w, const RootSystem& rs, int k_min, int k_max,
                                int step, Extension ext);

} // namespace wrt
