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

#include "kzero/descent.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "kzero/error.hpp"
#include "kzero/text.hpp"

namespace kzero {

namespace {

bool is_identity(const Matrix& a) { return a == Matrix::identity(a.field(), a.rows()); }

void require_ext_forms(const GaloisContext& ctx, const std::vector<HomogPoly>& forms) {
    if (forms.empty()) fail("descent needs at least one form");
    for (const auto& h : forms) {
        if (!(h.field() == ctx.ext)) fail("forms must be given over " + ctx.ext.to_string());
        if (h.degree() != 1) fail("descent forms must be linear");
        if (h.is_zero()) fail("zero form");
        if (h.nvars() != forms.front().nvars()) fail("forms disagree on the number of variables");
    }
}

Matrix coefficient_rows(const std::vector<HomogPoly>& forms) {
    std::vector<Vector> rows;
    for (const auto& h : forms) rows.push_back(h.linear_coefficients());
    return Matrix::from_rows(forms.front().field(), rows, forms.front().nvars());
}

Matrix submatrix_columns(const Matrix& a, const std::vector<std::size_t>& cols) {
    Matrix out(a.field(), a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(i, cols[j]);
    return out;
}

/// Rows spanning the same space, in reduced echelon form without zero rows.
Matrix echelon_rows(const Matrix& a) {
    const RrefResult r = rref(a);
    Matrix out(a.field(), r.rank, a.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = r.reduced(i, j);
    return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

Matrix cast_matrix(const Matrix& a, Field target) {
    Matrix out(target, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).cast(target);
    return out;
}

}  // namespace

GaloisContext GaloisContext::make(std::uint32_t p, unsigned m) {
    if (m < 2) fail("descent needs an extension of degree m >= 2");
    return GaloisContext{Field::prime(p), Field::extension(p, m), m};
}

Elem GaloisContext::frobenius(const Elem& a, unsigned power) const {
    Elem out = a;
    for (unsigned i = 0; i < power % m; ++i) out = out.frobenius();
    return out;
}

Matrix GaloisContext::frobenius(const Matrix& a, unsigned power) const {
    return a.map([&](const Elem& e) { return frobenius(e, power); });
}

bool is_cocycle(const GaloisContext& ctx, const Cocycle& c) {
    if (c.images.size() != ctx.m) return false;
    const std::size_t r = c.images.front().rows();
    for (const auto& a : c.images) {
        if (!(a.field() == ctx.ext) || a.rows() != r || a.cols() != r || rank(a) != r) return false;
    }
    if (!is_identity(c.images[0])) return false;
    for (unsigned i = 0; i < ctx.m; ++i) {
        for (unsigned j = 0; j < ctx.m; ++j) {
            if (!(c.images[(i + j) % ctx.m] == c.images[i] * ctx.frobenius(c.images[j], i))) return false;
        }
    }
    return true;
}

Stability frobenius_stability_check(const GaloisContext& ctx, const std::vector<HomogPoly>& forms) {
    require_ext_forms(ctx, forms);
    const Matrix all = coefficient_rows(forms);
    // Maximal independent subset: pivots of the transpose.
    const RrefResult cols = rref(all.transpose());
    std::vector<Vector> rows;
    for (std::size_t i : cols.pivots) rows.push_back(all.row(i));
    const Matrix t = Matrix::from_rows(ctx.ext, rows, all.cols());
    const std::size_t r = rows.size();

    Stability out{false, cols.pivots, t, {}};
    // sigma(T) = P T, solved on a set of columns where T is invertible.
    const std::vector<std::size_t> pivots = rref(t).pivots;
    const Matrix st = ctx.frobenius(t);
    const Matrix p = submatrix_columns(st, pivots) * invert(submatrix_columns(t, pivots));
    if (!(p * t == st)) return out;

    out.stable = true;
    // P_k = sigma^{k-1}(P) ... sigma(P) P and alpha_{sigma^k} = P_k^{-1}.
    Matrix pk = Matrix::identity(ctx.ext, r);
    for (unsigned k = 0; k < ctx.m; ++k) {
        out.cocycle.images.push_back(invert(pk));
        pk = ctx.frobenius(p, k) * pk;
    }
    if (!is_identity(pk)) defect("Frobenius^m does not act trivially on the span");
    return out;
}

Trivialization h90_trivialize(const GaloisContext& ctx, const Cocycle& c, std::uint64_t seed, unsigned max_attempts) {
    if (!is_cocycle(ctx, c)) fail("not a cocycle");
    const std::size_t r = c.images.front().rows();
    if (std::all_of(c.images.begin(), c.images.end(), is_identity)) {
        return Trivialization{Matrix::identity(ctx.ext, r), 1};
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t q = ctx.ext.order();
    Matrix cmat = Matrix::identity(ctx.ext, r);
    for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
        Matrix b(ctx.ext, r, r);
        for (unsigned i = 0; i < ctx.m; ++i) {
            const Matrix term = c.images[i] * ctx.frobenius(cmat, i);
            for (std::size_t x = 0; x < r; ++x)
                for (std::size_t y = 0; y < r; ++y) b(x, y) += term(x, y);
        }
        if (rank(b) == r) {
            if (!(c.images[1 % ctx.m] * ctx.frobenius(b) == b)) defect("averaged matrix does not trivialize the cocycle");
            return Trivialization{b, attempt};
        }
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < r; ++y) cmat(x, y) = Elem::from_index(ctx.ext, rng() % q);
    }
    throw Error(ErrorKind::budget, "Hilbert 90 retry budget exhausted (seed " + std::to_string(seed) + ")");
}

std::vector<Vector> fixed_point_basis(const GaloisContext& ctx, const std::vector<HomogPoly>& forms) {
    require_ext_forms(ctx, forms);
    const Matrix t = coefficient_rows(forms);
    const std::size_t cols = t.cols();
    // v in span(T) iff v . u = 0 for every u in ker(T); for v over F_p this splits digit by digit.
    std::vector<Vector> equations;
    for (const auto& u : nullspace(t)) {
        for (unsigned k = 0; k < ctx.m; ++k) {
            Vector row;
            for (std::size_t j = 0; j < cols; ++j) row.push_back(Elem::from_int(ctx.base, u[j].coeffs()[k]));
            equations.push_back(std::move(row));
        }
    }
    if (equations.empty()) {
        std::vector<Vector> all;
        for (std::size_t j = 0; j < cols; ++j) all.push_back(Matrix::identity(ctx.base, cols).row(j));
        return all;
    }
    return nullspace(Matrix::from_rows(ctx.base, equations, cols));
}

Descent descend_subspace(const GaloisContext& ctx, const std::vector<HomogPoly>& forms, std::uint64_t seed) {
    Stability st = frobenius_stability_check(ctx, forms);
    if (!st.stable) fail("unstable: the span of the forms is not Frobenius-stable");
    Trivialization h90 = h90_trivialize(ctx, st.cocycle, seed);
    const Matrix w = invert(h90.b) * st.basis;
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            if (!w(i, j).in_prime_subfield()) defect("descended basis has a coefficient outside the base field");
    const Matrix rational = echelon_rows(cast_matrix(w, ctx.base));

    const auto oracle = fixed_point_basis(ctx, forms);
    if (oracle.size() != rational.rows()) defect("fixed-point oracle disagrees on the dimension of the descended space");
    const Matrix oracle_rows = Matrix::from_rows(ctx.base, oracle, w.cols());
    if (rank(stack(oracle_rows, rational)) != rational.rows()) defect("fixed-point oracle spans a different space");
    if (rank(stack(st.basis, cast_matrix(rational, ctx.ext))) != st.basis.rows()) defect("descended basis leaves the span");

    Descent out{{}, std::move(st), std::move(h90)};
    for (std::size_t i = 0; i < rational.rows(); ++i) {
        const Vector row = rational.row(i);
        out.basis.push_back(HomogPoly::linear(row));
    }
    return out;
}

StratResult class_of_descended_arrangement(const GaloisContext& ctx, const std::vector<HomogPoly>& forms,
                                           std::uint64_t seed, const SearchOptions&) {
    require_ext_forms(ctx, forms);
    std::vector<HomogPoly> dist;
    for (const auto& h : forms) {
        HomogPoly m = h.monic();
        if (std::find(dist.begin(), dist.end(), m) == dist.end()) dist.push_back(std::move(m));
    }
    const unsigned n = dist.front().nvars() - 1;
    const auto d = static_cast<unsigned>(dist.size());
    HomogPoly f = HomogPoly::constant(ctx.ext, n + 1, Elem::from_int(ctx.ext, 1));
    for (const auto& h : dist) f = f * h;
    f = f.monic();
    for (const auto& t : f.terms()) {
        if (!t.coefficient.in_prime_subfield()) fail("product of the forms is not defined over " + ctx.base.to_string());
    }
    const HomogPoly fb = f.cast(ctx.base);

    const Descent descent = descend_subspace(ctx, dist, seed);
    const auto r = static_cast<unsigned>(descent.basis.size());
    std::vector<Vector> rows;
    for (const auto& b : descent.basis) rows.push_back(b.linear_coefficients());
    const auto kernel = nullspace(Matrix::from_rows(ctx.base, rows, n + 1));
    const Matrix e = extend_to_basis(ctx.base, kernel, n + 1);
    std::vector<Vector> cols;
    for (std::size_t j = kernel.size(); j < n + 1; ++j) cols.push_back(e.column(j));
    for (std::size_t j = 0; j < kernel.size(); ++j) cols.push_back(e.column(j));
    const Matrix m = Matrix::from_columns(ctx.base, cols, n + 1);

    const HomogPoly g = linear_substitute(fb, m);
    for (unsigned j = r; j <= n; ++j) {
        if (g.uses_variable(j)) defect("product does not lie in k[x0..x_{r-1}] after the change of coordinates");
    }
    std::vector<unsigned> head(r);
    std::iota(head.begin(), head.end(), 0U);
    const HomogPoly gz = select_variables(g, head);

    bool all_rational = true;
    std::vector<HomogPoly> rational_forms;
    for (const auto& h : dist) {
        bool ok = true;
        for (const auto& t : h.terms()) ok = ok && t.coefficient.in_prime_subfield();
        all_rational = all_rational && ok;
        if (ok) rational_forms.push_back(select_variables(linear_substitute(h.cast(ctx.base), m), head));
    }
    const ClassExpr z = all_rational ? arrangement_inclusion_exclusion(rational_forms)
                                     : ClassExpr::of_atom(Atom::variety("V(" + to_string(gz) + ")", r - 1, {gz}));

    StratResult out{CountQuery{ctx.base, n, {fb}, {}}};
    out.hypotheses.push_back({"d <= n", d <= n});
    out.hypotheses.push_back({"span Frobenius-stable", true});
    out.hypotheses.push_back({"product defined over the base field", true});
    out.hypotheses.push_back({"(Y/G)(k) nonempty, so X(k) nonempty", r <= n});

    const CountQuery gq{ctx.base, n, {g}, {}};
    const CountTerm z_term{1, n + 1 - r, CountQuery{ctx.base, r - 1, {gz}, {}}};
    out.trace.add(TraceStep{"descent.h90", "alpha_sigma * sigma(B) = B for the averaged B",
                            std::nullopt,
                            descent.stability.cocycle.images[1 % ctx.m] * ctx.frobenius(descent.h90.b) == descent.h90.b});
    out.trace.add(TraceStep{"descent.oracle", "descended basis matches the fixed points of the span", std::nullopt, true});
    out.trace.add(TraceStep{"descent.coordinates", "rational coordinates with Y/G at x0 = ... = x_{r-1} = 0",
                            CountIdentity{ctx.base, {CountTerm{1, 0, out.input}}, {CountTerm{1, 0, gq}}}, std::nullopt});
    if (r <= n) {
        out.class_expr = projective_space_class(static_cast<int>(n - r)) + z.lshift(n - r + 1);
        out.trace.add(TraceStep{"descent.fibration", "X is Y/G = P^{n-r} plus an A^{n-r+1}-bundle over Z",
                                CountIdentity{ctx.base, {CountTerm{1, 0, gq}},
                                              {CountTerm{1, 0, CountQuery{ctx.base, n - r, {}, {}}}, z_term}},
                                std::nullopt});
        out.trace.add(TraceStep{"descent.rational-point", "Y/G is a linear subspace with rational points",
                                CountIdentity{ctx.base, {CountTerm{1, 0, CountQuery{ctx.base, n, descent.basis, {}}}},
                                              {CountTerm{1, 0, CountQuery{ctx.base, n - r, {}, {}}}}},
                                std::nullopt});
    } else {
        out.class_expr = z;
        out.trace.add(TraceStep{"descent.fibration", "the hyperplanes have no common point; X = Z",
                                CountIdentity{ctx.base, {CountTerm{1, 0, gq}}, {z_term}}, std::nullopt});
    }
    out.residue = residue_mod_L(out.class_expr);
    return out;
}

}  // namespace kzero
