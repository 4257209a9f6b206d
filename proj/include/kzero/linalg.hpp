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

#pragma once

// Exact dense linear algebra over any Field.  Pivoting and basis completion
// are deterministic so coordinate changes are reproducible.

#include <cstddef>
#include <span>
#include <vector>

#include "kzero/field.hpp"

namespace kzero {

class Matrix {
  public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(Field field, const std::vector<Vector>& columns, std::size_t rows);

    [[nodiscard]] Field field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Elem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] Matrix transpose() const;
    /// Entrywise image under `fn`, e.g. Frobenius.
    template <typename Fn>
    [[nodiscard]] Matrix map(Fn&& fn) const {
        Matrix out = *this;
        for (auto& e : out.entries_) e = fn(e);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form; the pivot in each column is the first nonzero entry at or below
/// the current row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}.  Each vector has the unit pattern of its free column and is then
/// scaled so that its first nonzero coordinate is 1.
std::vector<Vector> nullspace(const Matrix& m);
Matrix invert(const Matrix& m);
Elem determinant(const Matrix& m);
/// Invertible matrix whose first columns are `vectors`, completed with the standard basis
/// vectors of smallest index that keep the columns independent.
Matrix extend_to_basis(Field field, std::span<const Vector> vectors, std::size_t dim);

/// Whether `v` lies in the row span of `rows`.
bool in_row_span(const Matrix& rows, const Vector& v);

}  // namespace kzero
