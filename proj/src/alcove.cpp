#include "wrt/alcove.hpp"
#include "wrt/errors.hpp"

#include <stdexcept>

namespace wrt {

RatVec weight_from_labels(const RootSystem& rs, const IntVec& m) {
    const int n = rs.rank;
    RatVec v(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (m[i] == 0) continue;
        for (int j = 0; j < n; ++j) v[j] += m[i] * rs.weight_basis(i, j);
    }
    return v;
}

std::vector<WeightIndex> admissible_weights(const RootSystem& rs, int k) {
    if (k < rs.dual_coxeter)
        throw Error(ErrorCode::invalid_level, "level " + std::to_string(k) +
                                                  " is below the dual Coxeter number " +
                                                  std::to_string(rs.dual_coxeter) + " of " +
                                                  rs.name());
    const int n = rs.rank;
    const long long top = k - rs.dual_coxeter;
    std::vector<WeightIndex> out;
    IntVec m(n, 0);
    // lexicographic odometer over labels bounded by the comark budget
    while (true) {
        long long used = 0;
        for (int i = 0; i < n; ++i) used += rs.comarks[i] * m[i];
        if (used <= top) {
            RatVec lam = weight_from_labels(rs, m);
            if (highest_root_value(rs, lam) <= top) {
                WeightIndex w;
                w.level = k;
                w.admissible_form = m;
                w.lambda.resize(n);
                for (int i = 0; i < n; ++i) w.lambda[i] = (lam[i] + rs.rho[i]) / k;
                for (int i = 0; i < n; ++i)
                    if (simple_root_value(rs, i, w.lambda) <= 0)
                        throw std::logic_error("alcove point on a wall");
                if (highest_root_value(rs, w.lambda) >= 1)
                    throw std::logic_error("alcove point on a wall");
                out.push_back(std::move(w));
            }
        }
        int pos = n - 1;
        while (pos >= 0) {
            ++m[pos];
            long long partial = 0;
            for (int i = 0; i <= pos; ++i) partial += rs.comarks[i] * m[i];
            if (partial <= top) break;
            m[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<RatVec> alcove_points(const RootSystem& rs, int k) {
    std::vector<RatVec> pts;
    for (auto& w : admissible_weights(rs, k)) pts.push_back(w.lambda);
    return pts;
}

} // namespace wrt
