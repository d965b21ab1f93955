#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace wrt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rational>;

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill = T(0))
        : rows_(r), cols_(c), data_(r * c, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // ordering used to deduplicate group elements
    bool operator<(const Matrix& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return data_ < o.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<long long>;
using RatMatrix = Matrix<Rational>;
using BigMatrix = Matrix<Integer>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l) == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
        }
    return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
    std::vector<T> y(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
    Matrix<To> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = To(m(i, j));
    return r;
}

RatVec to_rational(const IntVec& v);

// Gauss-Jordan over Q. Throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
// Fraction-free Bareiss elimination.
Integer determinant(const BigMatrix& m);
long long determinant(const IntMatrix& m);

bool is_integral(const Rational& r);
// r reduced into [0, m) for positive integer m
Rational mod_positive(const Rational& r, long long m);
Integer floor_div(const Rational& r);

std::string to_string(const Rational& r);
std::string to_string(const Integer& r);
Rational parse_rational(const std::string& s);

// exp(i*pi*r), with r reduced mod 2 exactly before conversion to double
std::complex<double> cis_pi(const Rational& r);

} // namespace wrt
