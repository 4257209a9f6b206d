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

// Sparse homogeneous polynomials (projective forms) and their affine charts.

#include <span>
#include <vector>

#include "kzero/field.hpp"
#include "kzero/linalg.hpp"

namespace kzero {

using Exponents = std::vector<unsigned>;

struct Term {
    Exponents exponents;
    Elem coefficient;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Graded lexicographic order, largest monomial first (x0^d leads).
bool grlex_greater(const Exponents& a, const Exponents& b);

/// A form of fixed degree in `nvars` variables.  Terms are kept in grlex order without zero
/// coefficients, so equality is representational.  The zero form keeps its declared degree.
class HomogPoly {
  public:
    HomogPoly(Field field, unsigned nvars, unsigned degree);

    /// Combines like terms; every exponent vector must have length nvars and sum `degree`.
    static HomogPoly from_terms(Field field, unsigned nvars, unsigned degree, std::vector<Term> terms);
    static HomogPoly variable(Field field, unsigned nvars, unsigned index);
    /// sum coeffs[i] * x_i
    static HomogPoly linear(std::span<const Elem> coeffs);
    static HomogPoly constant(Field field, unsigned nvars, const Elem& value);

    [[nodiscard]] Field field() const { return field_; }
    [[nodiscard]] unsigned nvars() const { return nvars_; }
    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Elem coefficient(const Exponents& exps) const;
    [[nodiscard]] Elem evaluate(std::span<const Elem> point) const;
    /// Coefficients of x_0..x_{n-1}; degree 1 only.
    [[nodiscard]] Vector linear_coefficients() const;
    [[nodiscard]] bool uses_variable(unsigned index) const;
    [[nodiscard]] HomogPoly scaled(const Elem& c) const;
    /// Divided by the coefficient of its leading term (zero stays zero).
    [[nodiscard]] HomogPoly monic() const;
    /// Coefficients moved into `target` (see Elem::cast).
    [[nodiscard]] HomogPoly cast(Field target) const;

    friend HomogPoly operator+(const HomogPoly& a, const HomogPoly& b);
    friend HomogPoly operator-(const HomogPoly& a, const HomogPoly& b);
    friend HomogPoly operator-(const HomogPoly& a);
    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
    friend bool operator==(const HomogPoly& a, const HomogPoly& b) = default;

  private:
    Field field_;
    unsigned nvars_;
    unsigned degree_;
    std::vector<Term> terms_;
};

/// A polynomial on an affine chart; not necessarily homogeneous.
class AffinePoly {
  public:
    AffinePoly(Field field, unsigned nvars);
    static AffinePoly from_terms(Field field, unsigned nvars, std::vector<Term> terms);

    [[nodiscard]] Field field() const { return field_; }
    [[nodiscard]] unsigned nvars() const { return nvars_; }
    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] Elem evaluate(std::span<const Elem> point) const;

    friend bool operator==(const AffinePoly& a, const AffinePoly& b) = default;

  private:
    Field field_;
    unsigned nvars_;
    std::vector<Term> terms_;
};

/// g(x) = f(M x).
HomogPoly linear_substitute(const HomogPoly& f, const Matrix& m);
HomogPoly partial_derivative(const HomogPoly& f, unsigned index);
/// (f_0, ..., f_d) with f = sum_k x_i^k f_k; each f_k keeps all nvars variables but does not
/// involve x_i and has degree d - k.
std::vector<HomogPoly> split_by_variable(const HomogPoly& f, unsigned index);
/// Sets x_i = 1; the remaining variables keep their relative order.
AffinePoly dehomogenize(const HomogPoly& f, unsigned index);
/// Inserts a new variable at position `index` and pads every term up to the total degree of g.
HomogPoly homogenize(const AffinePoly& g, unsigned index);

/// Restricts to the listed variables: variable k of the result is variable vars[k] of f.
/// f must not involve any other variable.
HomogPoly select_variables(const HomogPoly& f, std::span<const unsigned> vars);
/// Renames variable j of f to variable target[j] of a polynomial in `nvars` variables.
HomogPoly embed_variables(const HomogPoly& f, unsigned nvars, std::span<const unsigned> target);

}  // namespace kzero
