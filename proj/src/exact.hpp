#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace ogr {

// Canonical arbitrary-precision rational. GMP keeps every result reduced.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
int sign(const Rational& q);

// Dense univariate polynomial in eps, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}

    static Poly from_coeffs(std::vector<Rational> coeffs);
    static Poly monomial(int degree, const Rational& c);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int d) const;
    Rational eval(const Rational& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

std::string to_string(const Poly& p);
Poly parse_poly(std::string_view text);

struct Term {
    int degree;
    Rational coeff;
};

// Lowest-order nonzero term; empty when p is identically zero.
std::optional<Term> lowest_term(const Poly& p);

// Interpolating polynomial through (xs[i], ys[i]); xs pairwise distinct.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    // 1-based access, matching the mathematical indexing used throughout.
    T& at1(int i, int j) { return (*this)(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); }
    const T& at1(int i, int j) const {
        return (*this)(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Rows and columns given 1-based, in the order they should appear.
    Matrix select(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Matrix s(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = at1(rows[i], cols[j]);
        return s;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) fail(Errc::dimension, "matrix product: inner dimensions differ");
        Matrix p(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0)) continue;
                for (std::size_t j = 0; j < y.c_; ++j) p(i, j) += xik * y(k, j);
            }
        return p;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) fail(Errc::dimension, "matrix sum: shapes differ");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    bool is_zero() const {
        for (const T& e : a_)
            if (!(e == T(0))) return false;
        return true;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<Poly>;

Rational det(const QMatrix& m);
Poly det(const PMatrix& m);

// Minor on 1-based, strictly increasing row and column index lists.
Rational minor(const QMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// Many maximal-size minors of one polynomial matrix, sharing the evaluations.
std::vector<Poly> poly_minors(const PMatrix& m, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& sets);

Rational pfaffian(const QMatrix& m);

QMatrix evaluate(const PMatrix& m, const Rational& x);
PMatrix to_poly(const QMatrix& m);

// Exact n x n skew-symmetric matrix.
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(QMatrix a);
    static SkewMatrix zero(int n) { return SkewMatrix(QMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n))); }

    int n() const { return static_cast<int>(a_.rows()); }
    const QMatrix& matrix() const { return a_; }
    const Rational& operator()(int i, int j) const { return a_.at1(i, j); }
    friend bool operator==(const SkewMatrix& x, const SkewMatrix& y) { return x.a_ == y.a_; }

private:
    QMatrix a_;
};

bool is_skew(const QMatrix& m);

// Sorted subsets of {1..m} of size k, lexicographic.
std::vector<std::vector<int>> subsets(int m, int k);

}  // namespace ogr
