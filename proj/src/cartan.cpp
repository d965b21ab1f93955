#include "wrt/cartan.hpp"
#include "wrt/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

namespace wrt {

namespace {

void link(IntMatrix& a, int i, int j, int aij = -1, int aji = -1) {
    a(i, j) = aij;
    a(j, i) = aji;
}

IntMatrix cartan_of(Family f, int n) {
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    switch (f) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
        break;
    case Family::B:
        for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
        link(a, n - 2, n - 1, -1, -2); // last simple root short
        break;
    case Family::C:
        for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
        link(a, n - 2, n - 1, -2, -1); // last simple root long
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
        link(a, n - 3, n - 1);
        break;
    case Family::E:
        // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4
        link(a, 0, 2);
        link(a, 1, 3);
        for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
        break;
    case Family::F:
        link(a, 0, 1);
        link(a, 1, 2, -1, -2);
        link(a, 2, 3);
        break;
    case Family::G:
        link(a, 0, 1, -3, -1); // first simple root short
        break;
    }
    return a;
}

bool valid_type(Family f, int n) {
    switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
    }
    return false;
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

IntVec symmetrizer_of(const IntMatrix& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<Rational> d(n, Rational(0));
    d[0] = 1;
    std::deque<int> todo{0};
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || a(i, j) == 0 || d[j] != 0) continue;
            d[j] = d[i] * a(j, i) / a(i, j);
            todo.push_back(j);
        }
    }
    Rational lo = *std::min_element(d.begin(), d.end());
    IntVec out(n);
    for (int i = 0; i < n; ++i) {
        Rational v = d[i] / lo;
        if (!is_integral(v)) throw Error(ErrorCode::invalid_group, "non-integral symmetrizer");
        out[i] = static_cast<long long>(numerator(v));
    }
    return out;
}

std::vector<IntVec> positive_roots_of(const IntMatrix& a) {
    const int n = static_cast<int>(a.rows());
    std::set<IntVec> known;
    std::vector<IntVec> roots, layer;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    while (!layer.empty()) {
        roots.insert(roots.end(), layer.begin(), layer.end());
        std::vector<IntVec> next;
        for (const IntVec& beta : layer) {
            for (int i = 0; i < n; ++i) {
                // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                int p = 0;
                IntVec down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                long long pair = 0;
                for (int j = 0; j < n; ++j) pair += beta[j] * a(i, j);
                long long q = p - pair;
                if (q <= 0) continue;
                IntVec up = beta;
                up[i] += 1;
                if (known.insert(up).second) next.push_back(up);
            }
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    return roots;
}

} // namespace

std::string RootSystem::name() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

RootSystem build_root_system(Family family, int rank) {
    if (!valid_type(family, rank))
        throw Error(ErrorCode::invalid_group, std::string("no simple type ") +
                                                  family_letter(family) + std::to_string(rank));
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    const int n = rank;
    rs.cartan_matrix = cartan_of(family, n);
    const IntMatrix& a = rs.cartan_matrix;
    rs.symmetrizer = symmetrizer_of(a);

    rs.gram = IntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.gram(i, j) = a(i, j) * rs.symmetrizer[j];

    RatMatrix g = convert<Rational>(rs.gram);
    rs.weight_basis = inverse(g);
    rs.vol_sq = determinant(g);
    rs.gram_det = static_cast<long long>(numerator(rs.vol_sq));
    rs.gram_adjugate = IntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = rs.weight_basis(i, j) * rs.vol_sq;
            rs.gram_adjugate(i, j) = static_cast<long long>(numerator(v));
        }

    rs.rho.assign(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.rho[i] += rs.weight_basis(i, j);

    rs.positive_roots = positive_roots_of(a);
    rs.num_pos_roots = static_cast<int>(rs.positive_roots.size());
    rs.dim_g = n + 2 * rs.num_pos_roots;

    const IntVec& top = *std::max_element(
        rs.positive_roots.begin(), rs.positive_roots.end(), [](const IntVec& x, const IntVec& y) {
            long long hx = 0, hy = 0;
            for (auto v : x) hx += v;
            for (auto v : y) hy += v;
            return hx < hy;
        });
    rs.highest_root.assign(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.highest_root[i] += top[j] * a(i, j);
    rs.comarks.resize(n);
    long long h = 1;
    for (int j = 0; j < n; ++j) {
        rs.comarks[j] = top[j] / rs.symmetrizer[j];
        h += rs.comarks[j];
    }
    rs.dual_coxeter = static_cast<int>(h);
    return rs;
}

RootSystem parse_group(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(c));
    if (s.size() < 2) throw Error(ErrorCode::invalid_group, "cannot parse group '" + text + "'");
    const std::string letters = "ABCDEFG";
    auto pos = letters.find(s[0]);
    if (pos == std::string::npos)
        throw Error(ErrorCode::invalid_group, "unknown family in '" + text + "'");
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])) || rank > 1000)
            throw Error(ErrorCode::invalid_group, "bad rank in '" + text + "'");
        rank = rank * 10 + (s[i] - '0');
    }
    return build_root_system(static_cast<Family>(pos), rank);
}

Integer weyl_group_order(const RootSystem& rs) {
    const int n = rs.rank;
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    switch (rs.family) {
    case Family::A: return fact * (n + 1);
    case Family::B:
    case Family::C: return (Integer(1) << n) * fact;
    case Family::D: return (Integer(1) << (n - 1)) * fact;
    case Family::E: return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

std::vector<WeylElement> weyl_elements(const RootSystem& rs, std::size_t guard) {
    const int n = rs.rank;
    std::vector<IntMatrix> gens;
    for (int i = 0; i < n; ++i) {
        IntMatrix s = IntMatrix::identity(n);
        for (int j = 0; j < n; ++j) s(i, j) -= rs.cartan_matrix(j, i);
        gens.push_back(s);
    }
    std::vector<WeylElement> out{{IntMatrix::identity(n), 1}};
    std::set<IntMatrix> seen{out[0].matrix};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const IntMatrix& s : gens) {
            IntMatrix m = s * out[head].matrix;
            if (!seen.insert(m).second) continue;
            if (out.size() >= guard)
                throw Error(ErrorCode::weyl_guard, "Weyl group of " + rs.name() +
                                                       " exceeds guard of " +
                                                       std::to_string(guard) + " elements");
            out.push_back({std::move(m), -out[head].sign});
        }
    }
    return out;
}

Rational pairing(const RootSystem& rs, const RatVec& x, const RatVec& y) {
    const std::size_t n = static_cast<std::size_t>(rs.rank);
    if (x.size() != n || y.size() != n)
        throw Error(ErrorCode::dimension_mismatch, "pairing: vectors must have length " +
                                                       std::to_string(n));
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) s += x[i] * rs.gram(i, j) * y[j];
    }
    return s;
}

Rational simple_root_value(const RootSystem& rs, int i, const RatVec& x) {
    Rational s = 0;
    for (int j = 0; j < rs.rank; ++j) s += rs.cartan_matrix(j, i) * x[j];
    return s;
}

Rational highest_root_value(const RootSystem& rs, const RatVec& x) {
    Rational s = 0;
    for (int j = 0; j < rs.rank; ++j) s += rs.highest_root[j] * x[j];
    return s;
}

} // namespace wrt
