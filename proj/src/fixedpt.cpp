#include "wrt/fixedpt.hpp"
#include "wrt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace wrt {

namespace {

void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void add_row(BigMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void add_col(BigMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

} // namespace

SmithForm smith_normal_form(const BigMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    BigMatrix a = m, U = BigMatrix::identity(r), V = BigMatrix::identity(c);
    const std::size_t lim = std::min(r, c);
    for (std::size_t t = 0; t < lim; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = r, pj = c;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (a(i, j) != 0 && (pi == r || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == r) break;
            if (pi != t) {
                swap_rows(a, t, pi);
                swap_rows(U, t, pi);
            }
            if (pj != t) {
                swap_cols(a, t, pj);
                swap_cols(V, t, pj);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);
                add_row(a, i, t, q);
                add_row(U, i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                add_col(a, j, t, q);
                add_col(V, j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block by the pivot
            std::size_t bad = r;
            for (std::size_t i = t + 1; i < r && bad == r; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == r) break;
            add_row(a, t, bad, Integer(-1));
            add_row(U, t, bad, Integer(-1));
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < r; ++j) U(t, j) = -U(t, j);
        }
    }
    SmithForm s{U, a, V, {}};
    for (std::size_t t = 0; t < lim; ++t) s.diagonal.push_back(a(t, t));
    return s;
}

IntMatrix tensor_matrix(const SL2& A, const WeylElement& w) {
    const std::size_t n = w.matrix.rows();
    IntMatrix m(2 * n, 2 * n);
    const long long blk[2][2] = {{A.a, A.b}, {A.c, A.d}};
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(bi * n + i, bj * n + j) = blk[bi][bj] * w.matrix(i, j);
    return m;
}

namespace {

BigMatrix displacement(const SL2& A, const WeylElement& w) {
    BigMatrix m = convert<Integer>(tensor_matrix(A, w));
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1;
    return m;
}

Rational theta_from(const RatVec& x, const RatVec& gm, const RootSystem& rs) {
    const std::size_t n = rs.rank;
    RatVec p(x.begin(), x.begin() + n), q(x.begin() + n, x.end());
    RatVec g(gm.begin(), gm.begin() + n), mu(gm.begin() + n, gm.end());
    return pairing(rs, mu, p) - pairing(rs, g, q) + pairing(rs, g, mu);
}

} // namespace

Rational cs_phase_at(const RatVec& x, const SL2& A, const WeylElement& w, const RootSystem& rs) {
    RatMatrix m = convert<Rational>(displacement(A, w));
    RatVec gm = m * x;
    for (const auto& v : gm)
        if (!is_integral(v))
            throw Error(ErrorCode::invalid_argument, "point is not fixed by A (x) w");
    return theta_from(x, gm, rs);
}

Rational cs_phase(const FixedPointDatum& d, const RootSystem& rs) {
    RatVec gm;
    for (const auto& v : d.gamma_mu) gm.emplace_back(v);
    return theta_from(d.point.coords, gm, rs);
}

Integer fixed_point_count(const SL2& A, const WeylElement& w, const RootSystem&) {
    return abs(determinant(displacement(A, w)));
}

double det_factor(const SL2& A, const WeylElement& w, const RootSystem& rs) {
    Integer d = fixed_point_count(A, w, rs);
    if (d == 0)
        throw Error(ErrorCode::singular_fixed_points,
                    "1 is an eigenvalue of A (x) w for A = " + to_string(A));
    return std::sqrt(static_cast<double>(d));
}

std::vector<FixedPointDatum> fixed_points(const SL2& A, const WeylElement& w, const RootSystem& rs) {
    BigMatrix m = displacement(A, w);
    const std::size_t dim = m.rows();
    SmithForm snf = smith_normal_form(m);
    for (const auto& d : snf.diagonal)
        if (d == 0)
            throw Error(ErrorCode::singular_fixed_points,
                        "1 is an eigenvalue of A (x) w for A = " + to_string(A));

    std::vector<FixedPointDatum> out;
    std::vector<Integer> j(dim, 0);
    RatMatrix V = convert<Rational>(snf.V);
    RatMatrix mr = convert<Rational>(m);
    while (true) {
        RatVec y(dim);
        for (std::size_t i = 0; i < dim; ++i) y[i] = Rational(j[i], snf.diagonal[i]);
        RatVec x = V * y;
        for (auto& v : x) v = mod_positive(v, 1);
        RatVec gm = mr * x;
        FixedPointDatum d;
        d.point.coords = x;
        for (const auto& v : gm) d.gamma_mu.push_back(numerator(v));
        d.theta_over_pi = theta_from(x, gm, rs);
        d.weyl = w;
        out.push_back(std::move(d));

        std::size_t pos = 0;
        while (pos < dim) {
            if (++j[pos] < snf.diagonal[pos]) break;
            j[pos] = 0;
            ++pos;
        }
        if (pos == dim) break;
    }
    std::sort(out.begin(), out.end(), [](const FixedPointDatum& a, const FixedPointDatum& b) {
        return a.point.coords < b.point.coords;
    });
    return out;
}

cd cs_exponential(const Rational& theta_over_pi, long long k) {
    return cis_pi(theta_over_pi * k);
}

} // namespace wrt
