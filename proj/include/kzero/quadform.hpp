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

// Quadratic forms in odd or zero characteristic, stored by their Gram matrix:
// q(x) = x^T G x, so the coefficient of x_i x_j (i != j) is 2 G_ij.

#include <optional>

#include "kzero/count.hpp"
#include "kzero/linalg.hpp"
#include "kzero/poly.hpp"

namespace kzero {

class QuadForm {
  public:
    /// Gram matrix must be square and symmetric; the field must not have characteristic 2.
    QuadForm(Field field, Matrix gram);

    /// From a degree 2 form.
    static QuadForm from_poly(const HomogPoly& f);

    [[nodiscard]] Field field() const { return field_; }
    [[nodiscard]] unsigned nvars() const { return static_cast<unsigned>(gram_.rows()); }
    [[nodiscard]] const Matrix& gram() const { return gram_; }
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] bool is_nondegenerate() const { return rank() == nvars(); }
    [[nodiscard]] HomogPoly to_poly() const;
    [[nodiscard]] Elem value(const Vector& x) const;
    /// x^T G y
    [[nodiscard]] Elem bilinear(const Vector& x, const Vector& y) const;
    /// The form x -> q(M x).
    [[nodiscard]] QuadForm substitute(const Matrix& m) const;

  private:
    Field field_;
    Matrix gram_;
};

struct Diagonalization {
    Matrix transform;      ///< M with M^T G M diagonal
    Vector diagonal;       ///< nonzero entries first
    std::size_t rank;
};

/// Symmetric Gaussian elimination.  A zero pivot is replaced by the next nonzero diagonal
/// entry; if the remaining diagonal is zero, the first pair (i, j) with G_ij != 0 is mixed
/// (e_i -> e_i + e_j).
Diagonalization diagonalize(const QuadForm& q);

/// A zero of q with first nonzero coordinate 1, or nullopt.  Finite fields enumerate P^n in
/// the counting order; over Q integer vectors of height <= `height` are searched.
std::optional<Vector> find_projective_point(const QuadForm& q, int height = 10, const CountOptions& options = {});

struct HyperbolicNormalization {
    Matrix transform;  ///< M with q(M y) = y0*y1 + residual(y2, ..., yn) and M e_1 = x
    QuadForm residual;
};

/// For nondegenerate q and a zero x of q.
HyperbolicNormalization hyperbolic_normalize(const QuadForm& q, const Vector& x);

}  // namespace kzero
