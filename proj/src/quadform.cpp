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

#include "kzero/quadform.hpp"

#include <algorithm>

#include "kzero/error.hpp"

namespace kzero {

namespace {

void check_characteristic(Field field) {
    if (field.characteristic() == 2) fail("characteristic 2 is not supported for quadratic forms");
}

Elem half(Field field) { return Elem::from_int(field, 2).inverse(); }

}  // namespace

QuadForm::QuadForm(Field field, Matrix gram) : field_(field), gram_(std::move(gram)) {
    check_characteristic(field);
    if (gram_.rows() != gram_.cols()) fail("Gram matrix must be square");
    if (gram_.rows() > 0 && !(gram_.field() == field)) fail("Gram matrix field mismatch");
    if (!(gram_ == gram_.transpose())) fail("Gram matrix must be symmetric");
}

QuadForm QuadForm::from_poly(const HomogPoly& f) {
    check_characteristic(f.field());
    if (f.degree() != 2) fail("wrong degree: expected a quadratic form, got degree " + std::to_string(f.degree()));
    const unsigned n = f.nvars();
    Matrix g(f.field(), n, n);
    const Elem h = half(f.field());
    for (const auto& t : f.terms()) {
        std::vector<unsigned> idx;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned k = 0; k < t.exponents[i]; ++k) idx.push_back(i);
        }
        if (idx[0] == idx[1]) {
            g(idx[0], idx[0]) = t.coefficient;
        } else {
            g(idx[0], idx[1]) = t.coefficient * h;
            g(idx[1], idx[0]) = t.coefficient * h;
        }
    }
    return QuadForm(f.field(), std::move(g));
}

std::size_t QuadForm::rank() const { return nvars() == 0 ? 0 : kzero::rank(gram_); }

HomogPoly QuadForm::to_poly() const {
    const unsigned n = nvars();
    std::vector<Term> terms;
    const Elem two = Elem::from_int(field_, 2);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i; j < n; ++j) {
            Exponents e(n, 0);
            ++e[i];
            ++e[j];
            terms.push_back(Term{e, i == j ? gram_(i, i) : gram_(i, j) * two});
        }
    }
    return HomogPoly::from_terms(field_, n, 2, std::move(terms));
}

Elem QuadForm::value(const Vector& x) const { return bilinear(x, x); }

Elem QuadForm::bilinear(const Vector& x, const Vector& y) const {
    if (x.size() != nvars() || y.size() != nvars()) fail("vector length mismatch for quadratic form");
    Elem sum(field_);
    for (unsigned i = 0; i < nvars(); ++i) {
        if (x[i].is_zero()) continue;
        for (unsigned j = 0; j < nvars(); ++j) sum += x[i] * gram_(i, j) * y[j];
    }
    return sum;
}

QuadForm QuadForm::substitute(const Matrix& m) const { return QuadForm(field_, m.transpose() * gram_ * m); }

Diagonalization diagonalize(const QuadForm& q) {
    const Field field = q.field();
    const std::size_t n = q.nvars();
    Matrix a = q.gram();
    Matrix m = Matrix::identity(field, n);

    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(m(k, i), m(k, j));
    };
    // e_target -> e_target + c e_source
    auto add_index = [&](std::size_t target, std::size_t source, const Elem& c) {
        for (std::size_t k = 0; k < n; ++k) a(target, k) += c * a(source, k);
        for (std::size_t k = 0; k < n; ++k) a(k, target) += c * a(k, source);
        for (std::size_t k = 0; k < n; ++k) m(k, target) += c * m(k, source);
    };

    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t j = k + 1;
            while (j < n && a(j, j).is_zero()) ++j;
            if (j < n) {
                swap_index(k, j);
            } else {
                bool mixed = false;
                for (std::size_t i = k; i < n && !mixed; ++i) {
                    for (std::size_t l = i + 1; l < n && !mixed; ++l) {
                        if (a(i, l).is_zero()) continue;
                        add_index(i, l, Elem::from_int(field, 1));
                        swap_index(k, i);
                        mixed = true;
                    }
                }
                if (!mixed) break;  // remaining block is zero
            }
        }
        const Elem pivot_inv = a(k, k).inverse();
        for (std::size_t j = k + 1; j < n; ++j) {
            if (a(k, j).is_zero()) continue;
            add_index(j, k, -(a(k, j) * pivot_inv));
        }
        ++rank;
    }
    Vector diagonal;
    for (std::size_t i = 0; i < n; ++i) diagonal.push_back(a(i, i));
    return Diagonalization{std::move(m), std::move(diagonal), rank};
}

std::optional<Vector> find_projective_point(const QuadForm& q, int height, const CountOptions& options) {
    if (q.nvars() == 0) return std::nullopt;
    std::optional<Vector> found;
    auto visit = [&](std::span<const Elem> pt) {
        Vector v(pt.begin(), pt.end());
        if (q.value(v).is_zero()) {
            found = std::move(v);
            return false;
        }
        return true;
    };
    if (q.field().is_finite()) {
        CountQuery query{q.field(), q.nvars() - 1, {}, {}};
        for_each_point(query, visit, options);
    } else {
        for_each_bounded_height_point(q.field(), q.nvars(), height, visit);
    }
    return found;
}

HyperbolicNormalization hyperbolic_normalize(const QuadForm& q, const Vector& x) {
    const Field field = q.field();
    const std::size_t n = q.nvars();
    if (!q.is_nondegenerate()) fail("hyperbolic normalization needs a nondegenerate form");
    if (x.size() != n) fail("point has the wrong number of coordinates");
    if (std::all_of(x.begin(), x.end(), [](const Elem& e) { return e.is_zero(); })) fail("zero vector is not a point");
    if (!q.value(x).is_zero()) fail("point is not on the quadric");

    // First standard vector w with B(x, w) != 0.
    std::size_t j = 0;
    Vector w(n, Elem(field));
    for (; j < n; ++j) {
        if (!q.bilinear(x, Matrix::identity(field, n).column(j)).is_zero()) break;
    }
    if (j == n) defect("nondegenerate form has a point orthogonal to everything");
    w[j] = Elem::from_int(field, 1);
    const Elem beta = q.bilinear(x, w);
    // w' = w - q(w) / (2 beta) x is isotropic with B(w', x) = beta; u = w' / (2 beta).
    const Elem two_beta = Elem::from_int(field, 2) * beta;
    const Elem shift = q.value(w) / two_beta;
    Vector u(n, Elem(field));
    for (std::size_t i = 0; i < n; ++i) u[i] = (w[i] - shift * x[i]) / two_beta;

    // Orthogonal complement of span(u, x).
    Matrix constraints(field, 2, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n, Elem(field));
        e[i] = Elem::from_int(field, 1);
        constraints(0, i) = q.bilinear(u, e);
        constraints(1, i) = q.bilinear(x, e);
    }
    std::vector<Vector> columns{u, x};
    for (auto& v : nullspace(constraints)) columns.push_back(std::move(v));
    Matrix m = Matrix::from_columns(field, columns, n);

    const QuadForm transformed = q.substitute(m);
    Matrix residual(field, n - 2, n - 2);
    for (std::size_t r = 2; r < n; ++r)
        for (std::size_t c = 2; c < n; ++c) residual(r - 2, c - 2) = transformed.gram()(r, c);
    return HyperbolicNormalization{std::move(m), QuadForm(field, std::move(residual))};
}

}  // namespace kzero
