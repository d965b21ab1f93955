#include "wrt/oracles.hpp"
#include "wrt/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace wrt::oracle {

namespace {

Rational form(const RootSystem& rs, const RatVec& x, const RatVec& y) {
    Rational s = 0;
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) s += x[i] * Rational(rs.gram(i, j)) * y[j];
    return s;
}

// (gamma, mu) = (A (x) w) x - x, written out blockwise
RatVec displacement(const SL2& A, const WeylElement& w, const RatVec& x) {
    const int n = static_cast<int>(w.matrix.rows());
    RatVec p(x.begin(), x.begin() + n), q(x.begin() + n, x.end()), out(2 * n);
    for (int i = 0; i < n; ++i) {
        Rational wp = 0, wq = 0;
        for (int j = 0; j < n; ++j) {
            wp += Rational(w.matrix(i, j)) * p[j];
            wq += Rational(w.matrix(i, j)) * q[j];
        }
        out[i] = Rational(A.a) * wp + Rational(A.b) * wq - p[i];
        out[n + i] = Rational(A.c) * wp + Rational(A.d) * wq - q[i];
    }
    return out;
}

Rational theta_over_pi(const RootSystem& rs, const RatVec& x, const RatVec& gm) {
    const int n = rs.rank;
    RatVec p(x.begin(), x.begin() + n), q(x.begin() + n, x.end());
    RatVec g(gm.begin(), gm.begin() + n), mu(gm.begin() + n, gm.end());
    return form(rs, mu, p) - form(rs, g, q) + form(rs, g, mu);
}

} // namespace

Eigen::MatrixXd su2_s_matrix(int k) {
    Eigen::MatrixXd s(k - 1, k - 1);
    for (int a = 0; a < k - 1; ++a)
        for (int b = 0; b < k - 1; ++b)
            s(a, b) = std::sqrt(2.0 / k) * std::sin(std::numbers::pi * (a + 1) * (b + 1) / k);
    return s;
}

Eigen::VectorXcd su2_t_diagonal(int k) {
    Eigen::VectorXcd t(k - 1);
    for (int a = 0; a < k - 1; ++a)
        t(a) = std::exp(std::complex<double>(0, std::numbers::pi * a * (a + 2) / (2.0 * k)));
    return t;
}

std::set<RatVec> brute_force_fixed_points(const SL2& A, const WeylElement& w, const RootSystem& rs,
                                          std::size_t grid_guard) {
    const int n = rs.rank, dim = 2 * n;
    Integer det = fixed_point_count(A, w, rs);
    if (det == 0) throw Error(ErrorCode::singular_fixed_points, "singular A (x) w - I");
    const long long d = static_cast<long long>(det);
    if (std::pow(double(d), dim) > double(grid_guard))
        throw Error(ErrorCode::size_guard, "brute-force grid too large");
    // x = v/d is fixed iff (A (x) w - I) v = 0 mod d
    std::vector<long long> m(dim * dim, 0);
    const long long blocks[2][2] = {{A.a, A.b}, {A.c, A.d}};
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[(bi * n + i) * dim + bj * n + j] = blocks[bi][bj] * w.matrix(i, j);
    for (int i = 0; i < dim; ++i) m[i * dim + i] -= 1;

    std::set<RatVec> found;
    std::vector<long long> v(dim, 0);
    while (true) {
        bool fixed = true;
        for (int i = 0; i < dim && fixed; ++i) {
            long long s = 0;
            for (int j = 0; j < dim; ++j) s += m[i * dim + j] * v[j];
            fixed = s % d == 0;
        }
        if (fixed) {
            RatVec x(dim);
            for (int i = 0; i < dim; ++i) x[i] = Rational(v[i], d);
            found.insert(x);
        }
        int i = 0;
        while (i < dim && v[i] == d - 1) v[i++] = 0;
        if (i == dim) break;
        ++v[i];
    }
    return found;
}

std::vector<ShiftDiscrepancy> shift_invariance(const SL2& A, const WeylElement& w,
                                               const RootSystem& rs, int shifts,
                                               std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long long> u(-5, 5);
    std::vector<ShiftDiscrepancy> bad;
    const int dim = 2 * rs.rank;
    for (const RatVec& x : brute_force_fixed_points(A, w, rs)) {
        Rational base = theta_over_pi(rs, x, displacement(A, w, x));
        for (int t = 0; t < shifts; ++t) {
            std::vector<long long> l(dim);
            RatVec y = x;
            for (int i = 0; i < dim; ++i) {
                l[i] = u(gen);
                y[i] += l[i];
            }
            Rational th = theta_over_pi(rs, y, displacement(A, w, y));
            Rational diff = (th - base) / 2;
            if (denominator(diff) != 1) bad.push_back({x, l, base, th});
        }
    }
    return bad;
}

std::pair<Rational, Rational> strange_formula(const RootSystem& rs) {
    return {form(rs, rs.rho, rs.rho), Rational(rs.dual_coxeter * rs.dim_g, 12)};
}

std::size_t weight_lattice_index(const RootSystem& rs) {
    const int n = rs.rank;
    const long long D = rs.gram_det;
    // gram^{-1} v mod 1 is determined by adj(gram) v mod D
    RatMatrix inv = inverse(convert<Rational>(rs.gram));
    std::vector<long long> adj(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational a = inv(i, j) * Rational(D);
            if (denominator(a) != 1) throw Error(ErrorCode::invalid_argument, "adjugate is not integral");
            adj[i * n + j] = static_cast<long long>(numerator(a));
        }
    std::set<std::vector<long long>> classes;
    std::vector<long long> v(n, 0), x(n);
    while (true) {
        for (int i = 0; i < n; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j) s += adj[i * n + j] * v[j];
            x[i] = ((s % D) + D) % D;
        }
        classes.insert(x);
        int i = 0;
        while (i < n && v[i] == D - 1) v[i++] = 0;
        if (i == n) break;
        ++v[i];
    }
    return classes.size();
}

} // namespace wrt::oracle
