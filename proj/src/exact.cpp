#include "wrt/exact.hpp"
#include "wrt/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wrt {

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::invalid_group: return "invalid_group";
    case ErrorCode::invalid_level: return "invalid_level";
    case ErrorCode::invalid_word: return "invalid_word";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::wrong_parity: return "wrong_parity";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::corpus_error: return "corpus_error";
    case ErrorCode::weyl_guard: return "weyl_guard";
    case ErrorCode::rank_guard: return "rank_guard";
    case ErrorCode::singular_fixed_points: return "singular_fixed_points";
    case ErrorCode::non_hyperbolic: return "non_hyperbolic";
    case ErrorCode::truncation: return "truncation";
    case ErrorCode::quadrature: return "quadrature";
    case ErrorCode::size_guard: return "size_guard";
    case ErrorCode::branch_ambiguity: return "branch_ambiguity";
    }
    return "unknown";
}

RatVec to_rational(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (long long x : v) r.emplace_back(x);
    return r;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::domain_error("inverse: matrix not square");
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        Rational p = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Rational determinant(const RatMatrix& m) {
    const std::size_t n = m.rows();
    RatMatrix a = m;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

Integer determinant(const BigMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    BigMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (a(c, c) == 0) {
            std::size_t piv = c + 1;
            while (piv < n && a(piv, c) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t j = c + 1; j < n; ++j)
                a(r, j) = (a(r, j) * a(c, c) - a(r, c) * a(c, j)) / prev;
            a(r, c) = 0;
        }
        prev = a(c, c);
    }
    return sign * a(n - 1, n - 1);
}

long long determinant(const IntMatrix& m) {
    return static_cast<long long>(determinant(convert<Integer>(m)));
}

bool is_integral(const Rational& r) { return denominator(r) == 1; }

Integer floor_div(const Rational& r) {
    Integer num = numerator(r), den = denominator(r);
    Integer q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

Rational mod_positive(const Rational& r, long long m) {
    Rational q = r / m;
    return r - Rational(floor_div(q)) * m;
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const Integer& r) { return r.str(); }

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_argument, "cannot parse rational '" + s + "'");
    }
}

std::complex<double> cis_pi(const Rational& r) {
    Rational red = mod_positive(r, 2);
    // quarter turns are returned exactly
    if (red == 0) return {1.0, 0.0};
    if (red == Rational(1, 2)) return {0.0, 1.0};
    if (red == 1) return {-1.0, 0.0};
    if (red == Rational(3, 2)) return {0.0, -1.0};
    double x = static_cast<double>(red);
    return {std::cos(std::numbers::pi * x), std::sin(std::numbers::pi * x)};
}

} // namespace wrt
