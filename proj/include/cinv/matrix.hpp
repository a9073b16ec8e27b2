/*
   Copyright 2026 The cinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CINV_MATRIX_HPP
#define CINV_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cinv/rational.hpp"

namespace cinv {

/// Dense row-major matrix of exact rationals.
///
/// The ring elements handled by the library are square; rectangular shapes
/// only appear as linear systems passed to solve_linear().
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix zero(std::size_t n) { return Matrix(n, n); }
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    /// Order of a square matrix; throws DimensionError otherwise.
    std::size_t dim() const;

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> entries() const noexcept { return data_; }

    bool is_zero() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator-(Matrix m) { return m *= Rational(-1); }
    friend Matrix operator*(Matrix m, const Rational& s) { return m *= s; }
    friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// A^k by repeated squaring; A^0 = I.
Matrix pow(const Matrix& a, unsigned k);

/// Exact rank by Gaussian elimination.
std::size_t rank(const Matrix& a);

/// Inverse of a nonsingular square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Result of solving M X = B exactly.
struct LinearSolution {
    std::size_t rank = 0;             ///< rank of the coefficient matrix M
    std::optional<Matrix> solution;   ///< one solution (free variables set to 0), nullopt if inconsistent

    bool consistent() const noexcept { return solution.has_value(); }
};

/// Solves M X = B for a rectangular M (r x c) and B (r x m) by Gauss-Jordan
/// elimination with first-nonzero pivoting. Inconsistency is reported through
/// an empty solution; mismatched row counts throw DimensionError.
LinearSolution solve_linear(const Matrix& m, const Matrix& rhs);

/// Column vector (n*n x 1) holding the entries of a square matrix row by row.
Matrix vectorize(const Matrix& a);

/// Multi-line human-readable rendering, one bracketed row per line.
std::string to_string(const Matrix& a);

}  // namespace cinv

#endif  // CINV_MATRIX_HPP
