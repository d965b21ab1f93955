#pragma once

#include "wrt/alcove.hpp"
#include "wrt/cartan.hpp"
#include "wrt/modular.hpp"
#include "wrt/numeric.hpp"

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

namespace wrt {

enum class Normalization { geometric, fusion };
// Which group the matrix represents: a bare generator, M2 (R2 alternating),
// SL(2,Z) for even rank, Mp(2,Z) for odd rank, or M-infinity.
enum class Extension { none, m2, ev, odd, inf };

std::string to_string(Normalization n);
std::string to_string(Extension e);
Normalization parse_normalization(const std::string& s);
Extension parse_extension(const std::string& s);

struct RepMeta {
    std::string group;
    int level = 0;
    Normalization norm = Normalization::geometric;
    Extension ext = Extension::none;
};

struct RepMatrix {
    Eigen::MatrixXcd entries;
    std::shared_ptr<const std::vector<WeightIndex>> index;
    RepMeta meta;
};

struct CentralCharge {
    Rational c;
    Rational x_k;
};

CentralCharge central_charge(const RootSystem& rs, int k);

// Per-level data shared by all generator matrices: weights, Weyl group and
// the phase table exp(2 pi i r / (2 k det gram)).
class QuantumSpace {
public:
    QuantumSpace(const RootSystem& rs, int k, std::size_t weyl_guard = default_weyl_guard);

    const RootSystem& root_system() const { return rs_; }
    int level() const { return k_; }
    std::size_t dimension() const { return index_->size(); }
    const std::vector<WeylElement>& weyl() const { return weyl_; }
    const std::shared_ptr<const std::vector<WeightIndex>>& index() const { return index_; }

    // sum_w sign(w) exp(-2 pi i k B(lambda_i, w lambda_j)) over alcove points
    cd weyl_sum(std::size_t i, std::size_t j) const;
    // k^{-n/2} Vol^{-1}
    double gauss_prefactor() const { return gauss_prefactor_; }
    // gauss_prefactor * weyl_sum; unitary and symmetric
    Eigen::MatrixXcd gauss_matrix() const;

    // entries of the geometric or fusion T matrix raised to the given power
    Eigen::VectorXcd t_diagonal(Normalization norm, long long power = 1) const;
    // weyl_sum(i, j) for j = j0 .. dimension()-1, written to out[j - j0]
    void weyl_row(std::size_t i, std::size_t j0, std::vector<cd>& out) const;

private:
    RootSystem rs_;
    int k_;
    std::shared_ptr<const std::vector<WeightIndex>> index_;
    std::vector<WeylElement> weyl_;
    PhaseTable phases_;
    double gauss_prefactor_;
    std::vector<IntVec> shifted_;     // Dynkin labels + 1
    std::vector<IntMatrix> weyl_adj_; // w * adj(gram)
    std::vector<long long> t_geo_, t_fus_;
};

RepMatrix t_matrix(const RootSystem& rs, int k, Normalization norm);
RepMatrix s_matrix(const RootSystem& rs, int k, Normalization norm);
RepMatrix t_matrix(const QuantumSpace& qs, Normalization norm);
RepMatrix s_matrix(const QuantumSpace& qs, Normalization norm);

// Generator matrices composed along a word.  S letters carry a scalar phase
// times the Gauss matrix, T letters a diagonal, G and - are scalars.
struct WordStep {
    bool is_s = false;
    int s_power = 1;      // +1 or -1 for S steps
    long long t_power = 0; // exponent of the diagonal for T steps
};

struct WordPlan {
    cd scalar{1.0, 0.0};
    std::vector<WordStep> steps;
    Normalization basis = Normalization::geometric;
    Extension ext = Extension::m2;
};

WordPlan plan_word(const ModularWord& w, const RootSystem& rs, int k, Extension ext);
Eigen::MatrixXcd evaluate_plan(const QuantumSpace& qs, const WordPlan& plan);
// Trace of the plan. Words with at most two S letters are traced without
// forming matrices; longer words fall back to dense products.
cd plan_trace(const QuantumSpace& qs, const WordPlan& plan, std::size_t dense_limit = 4000);

RepMatrix r2alt(const ModularWord& w, const RootSystem& rs, int k);
RepMatrix r2alt(const M2Element& x, const RootSystem& rs, int k);
RepMatrix r_ev(const ModularWord& w, const RootSystem& rs, int k);
RepMatrix r_odd(const ModularWord& w, const RootSystem& rs, int k);
RepMatrix r_odd(const MpElement& x, const RootSystem& rs, int k);
RepMatrix r_infinity(const ModularWord& w, const RootSystem& rs, int k);
RepMatrix represent(const ModularWord& w, const QuantumSpace& qs, Extension ext);

cd zeta_k(const ModularWord& w, const RootSystem& rs, int k);

struct ComparisonReport {
    double dev_s = 0, dev_t = 0, dev_gamma = 0;
    double max() const;
};

ComparisonReport compare_representations(const RootSystem& rs, int k);

// Frobenius norm of U^* U - I; bounds the operator-norm defect from above.
double unitarity_defect(const Eigen::MatrixXcd& u);

} // namespace wrt
