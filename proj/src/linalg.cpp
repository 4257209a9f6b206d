/*
   Copyright 2026 The kzero Authors

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

#include "kzero/linalg.hpp"

#include <utility>

#include "kzero/error.hpp"

namespace kzero {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Elem(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem::from_int(field, 1);
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) fail("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail("matrix dimension mismatch");
    if (!(a.field_ == b.field_)) fail("matrix field mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Elem& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) fail("matrix-vector dimension mismatch");
    Vector out(a.rows_, Elem(a.field_));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
        if (pivot == r.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r(pivot, c), r(row, c));
        }
        const Elem scale = r(row, col).inverse();
        for (std::size_t c = 0; c < r.cols(); ++c) r(row, c) *= scale;
        for (std::size_t other = 0; other < r.rows(); ++other) {
            if (other == row || r(other, col).is_zero()) continue;
            const Elem factor = r(other, col);
            for (std::size_t c = 0; c < r.cols(); ++c) r(other, c) -= factor * r(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> nullspace(const Matrix& m) {
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), Elem(m.field()));
        v[free] = Elem::from_int(m.field(), 1);
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.reduced(i, free);
        std::size_t lead = 0;
        while (v[lead].is_zero()) ++lead;
        const Elem scale = v[lead].inverse();
        for (auto& e : v) e *= scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) fail("cannot invert a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Elem::from_int(m.field(), 1);
    }
    const RrefResult red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) fail("singular matrix");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
    return inv;
}

Elem determinant(const Matrix& m) {
    if (m.rows() != m.cols()) fail("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Elem det = Elem::from_int(m.field(), 1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Elem(m.field());
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        const Elem inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const Elem factor = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

Matrix extend_to_basis(Field field, std::span<const Vector> vectors, std::size_t dim) {
    std::vector<Vector> columns(vectors.begin(), vectors.end());
    for (const auto& v : columns) {
        if (v.size() != dim) fail("extend_to_basis: vector length mismatch");
    }
    std::size_t current = columns.empty() ? 0 : rank(Matrix::from_rows(field, columns, dim));
    if (current != columns.size()) fail("extend_to_basis: input vectors are linearly dependent");
    for (std::size_t j = 0; j < dim && columns.size() < dim; ++j) {
        Vector e(dim, Elem(field));
        e[j] = Elem::from_int(field, 1);
        columns.push_back(e);
        const std::size_t next = rank(Matrix::from_rows(field, columns, dim));
        if (next == current) {
            columns.pop_back();
        } else {
            current = next;
        }
    }
    return Matrix::from_columns(field, columns, dim);
}

bool in_row_span(const Matrix& rows, const Vector& v) {
    std::vector<Vector> extended;
    for (std::size_t r = 0; r < rows.rows(); ++r) extended.push_back(rows.row(r));
    const std::size_t before = rank(Matrix::from_rows(rows.field(), extended, rows.cols()));
    extended.push_back(v);
    return rank(Matrix::from_rows(rows.field(), extended, rows.cols())) == before;
}

}  // namespace kzero
