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

#include "cinv/matrix.hpp"

#include <utility>

#include "cinv/errors.hpp"

namespace cinv {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
}

// Reduces [m | rhs] in place to reduced row echelon form over the first
// m.cols() columns. Returns the pivot column of each pivot row.
std::vector<std::size_t> gauss_jordan(Matrix& m, Matrix& rhs) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    Rational factor;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(p, j), rhs(row, j));
        }
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= factor * rhs(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::size_t Matrix::dim() const {
    if (!is_square()) throw DimensionError("matrix is not square");
    return rows_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "sub");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_)
        throw DimensionError("mul: inner dimensions " + std::to_string(lhs.cols_) + " and " +
                             std::to_string(rhs.rows_) + " differ");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Rational& a = lhs(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

Matrix pow(const Matrix& a, unsigned k) {
    Matrix result = Matrix::identity(a.dim());
    Matrix base = a;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::size_t rank(const Matrix& a) {
    Matrix work = a;
    Matrix none(a.rows(), 0);
    return gauss_jordan(work, none).size();
}

std::optional<Matrix> inverse(const Matrix& a) {
    const std::size_t n = a.dim();
    LinearSolution s = solve_linear(a, Matrix::identity(n));
    if (s.rank < n) return std::nullopt;
    return std::move(s.solution);
}

LinearSolution solve_linear(const Matrix& m, const Matrix& rhs) {
    if (m.rows() != rhs.rows())
        throw DimensionError("solve_linear: system has " + std::to_string(m.rows()) + " rows, rhs has " +
                             std::to_string(rhs.rows()));
    Matrix a = m;
    Matrix b = rhs;
    const std::vector<std::size_t> pivots = gauss_jordan(a, b);

    LinearSolution out;
    out.rank = pivots.size();
    for (std::size_t i = out.rank; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != 0) return out;

    Matrix x(m.cols(), rhs.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = b(r, j);
    out.solution = std::move(x);
    return out;
}

Matrix vectorize(const Matrix& a) {
    Matrix v(a.rows() * a.cols(), 1);
    std::size_t k = 0;
    for (const auto& x : a.entries()) v(k++, 0) = x;
    return v;
}

std::string to_string(const Matrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out += '[';
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += ", ";
            out += to_string(a(i, j));
        }
        out += "]\n";
    }
    return out;
}

}  // namespace cinv
