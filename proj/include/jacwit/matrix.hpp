// Copyright 2026 The jacwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JACWIT_MATRIX_HPP
#define JACWIT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jacwit/error.hpp"
#include "jacwit/poly.hpp"
#include "jacwit/rational.hpp"

namespace jacwit {

/// Row-major dense matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw ShapeError("matrix data does not match its shape");
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix minor(std::size_t skip_row, std::size_t skip_col) const {
        std::vector<T> d;
        d.reserve((rows_ - 1) * (cols_ - 1));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == skip_row) continue;
            for (std::size_t c = 0; c < cols_; ++c)
                if (c != skip_col) d.push_back((*this)(r, c));
        }
        return Matrix(rows_ - 1, cols_ - 1, std::move(d));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<Polynomial>;
using RationalMatrix = Matrix<Rational>;

inline Rational exact_quotient(const Rational& a, const Rational& b) {
    if (b == 0) throw DivisionByZero("rational division by zero");
    return a / b;
}

namespace detail {

template <class T>
T cofactor_determinant(const Matrix<T>& m, const T& one) {
    const std::size_t n = m.rows();
    if (n == 0) return one;
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const T zero = one - one;
    T acc = zero;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == zero) continue;
        T term = m(0, c) * cofactor_determinant(m.minor(0, c), one);
        if (c % 2 == 0) acc = acc + term;
        else acc = acc - term;
    }
    return acc;
}

// Fraction-free elimination: after step k every entry of the trailing block is
// a (k+1)x(k+1) minor of the input, so each division is exact.
template <class T>
T bareiss_determinant(Matrix<T> m, const T& one) {
    const std::size_t n = m.rows();
    const T zero = one - one;
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == zero) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == zero) ++r;
            if (r == n) return zero;
            m.swap_rows(k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = zero;
        }
        prev = m(k, k);
    }
    return negate ? T(zero - m(n - 1, n - 1)) : m(n - 1, n - 1);
}

}  // namespace detail

/// Exact determinant over a commutative ring with exact division.
/// Cofactor expansion up to 4x4, fraction-free (Bareiss) elimination above.
template <class T>
T determinant(const Matrix<T>& m, const T& one) {
    if (!m.square())
        throw ShapeError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    if (m.rows() <= 4) return detail::cofactor_determinant(m, one);
    return detail::bareiss_determinant(m, one);
}

/// The multiplicative identity is taken from the entries' variable count.
inline Polynomial determinant(const PolyMatrix& m) {
    if (!m.square())
        throw ShapeError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    const std::size_t nvars = m.rows() == 0 ? 0 : m(0, 0).nvars();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c).nvars() != nvars) throw DomainError("matrix entries over different variable counts");
    return determinant(m, Polynomial::constant(nvars, 1));
}

inline Rational determinant(const RationalMatrix& m) { return determinant(m, Rational(1)); }

/// Gauss-Jordan inverse over Q; throws InvalidGenerator if singular.
inline RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.square()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw InvalidGenerator("singular linear generator");
        a.swap_rows(k, p);
        inv.swap_rows(k, p);
        const Rational s = 1 / a(k, k);
        for (std::size_t c = 0; c < n; ++c) {
            a(k, c) *= s;
            inv(k, c) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || a(r, k) == 0) continue;
            const Rational f = a(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(k, c);
                inv(r, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

}  // namespace jacwit

#endif  // JACWIT_MATRIX_HPP
