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

#include "kzero/strat.hpp"

#include <algorithm>
#include <numeric>

#include "kzero/error.hpp"
#include "kzero/text.hpp"

namespace kzero {

namespace {

CountQuery locus(Field field, unsigned ambient, std::vector<HomogPoly> gens, std::vector<ChartConstraint> cs = {}) {
    return CountQuery{field, ambient, std::move(gens), std::move(cs)};
}

CountTerm term(CountQuery q, long long coefficient = 1, unsigned power = 0) {
    return CountTerm{coefficient, power, std::move(q)};
}

CountTerm constant(long long coefficient, unsigned power = 0) { return CountTerm{coefficient, power, std::nullopt}; }

TraceStep identity_step(std::string tag, std::string description, Field field, std::vector<CountTerm> lhs,
                        std::vector<CountTerm> rhs) {
    return TraceStep{std::move(tag), std::move(description),
                     CountIdentity{field, std::move(lhs), std::move(rhs)}, std::nullopt};
}

std::vector<unsigned> iota(unsigned from, unsigned to) {
    std::vector<unsigned> v(to - from);
    std::iota(v.begin(), v.end(), from);
    return v;
}

std::vector<ChartConstraint> zeros(std::initializer_list<unsigned> vars) {
    std::vector<ChartConstraint> out;
    for (unsigned v : vars) out.push_back({v, Chart::zero});
    return out;
}

HomogPoly product(const std::vector<HomogPoly>& forms) {
    HomogPoly p = HomogPoly::constant(forms.front().field(), forms.front().nvars(), Elem::from_int(forms.front().field(), 1));
    for (const auto& f : forms) p = p * f;
    return p;
}

std::vector<HomogPoly> nonzero(std::vector<HomogPoly> gens) {
    std::erase_if(gens, [](const HomogPoly& g) { return g.is_zero(); });
    return gens;
}

std::string variety_label(const std::vector<HomogPoly>& gens) {
    std::string out = "V(";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + to_string(gens[i]);
    return out + ")";
}

Atom variety_atom(unsigned ambient, std::vector<HomogPoly> gens) {
    gens = nonzero(std::move(gens));
    if (gens.empty()) defect("variety atom without equations");
    std::string label = variety_label(gens);
    return Atom::variety(std::move(label), ambient, std::move(gens));
}

/// [V(gens)] when the generators are linear, otherwise an atom.
ClassExpr variety_class(Field field, unsigned ambient, const std::vector<HomogPoly>& gens) {
    const auto eqs = nonzero(gens);
    if (eqs.empty()) return projective_space_class(static_cast<int>(ambient));
    if (std::all_of(eqs.begin(), eqs.end(), [](const HomogPoly& g) { return g.degree() == 1; })) {
        std::vector<Vector> rows;
        for (const auto& g : eqs) rows.push_back(g.linear_coefficients());
        const auto rk = rank(Matrix::from_rows(field, rows, ambient + 1));
        if (rk > ambient) return {};
        return projective_space_class(static_cast<int>(ambient - rk));
    }
    return ClassExpr::of_atom(variety_atom(ambient, eqs));
}

void require_same_ring(const std::vector<HomogPoly>& gens) {
    for (const auto& g : gens) {
        if (!(g.field() == gens.front().field()) || g.nvars() != gens.front().nvars()) {
            fail("polynomials must share field and number of variables");
        }
    }
}

void append_hypotheses(StratResult& out, const StratResult& sub, const std::string& prefix) {
    for (const auto& h : sub.hypotheses) out.hypotheses.push_back({prefix + h.name, h.passed});
}

HomogPoly diagonal_form(Field field, unsigned nvars, std::span<const Elem> diag) {
    std::vector<Term> terms;
    for (unsigned i = 0; i < diag.size(); ++i) {
        Exponents e(nvars, 0);
        e[i] = 2;
        terms.push_back({e, diag[i]});
    }
    return HomogPoly::from_terms(field, nvars, 2, std::move(terms));
}

StratResult quadric_nondegenerate(const HomogPoly& f, const QuadForm& q, const SearchOptions& options) {
    const Field field = f.field();
    const unsigned n = f.nvars() - 1;
    StratResult out{locus(field, n, {f})};

    if (n == 0) {
        out.trace.add(identity_step("quadric.point", "a nonzero multiple of x0^2 has no zero in P^0", field,
                                    {term(out.input)}, {}));
        return out;
    }
    if (n == 1) {
        const Elem disc = -determinant(q.gram());
        const bool split = field.is_finite() ? is_square(disc).has_value() : rational_sqrt(disc).has_value();
        if (split) {
            out.class_expr = ClassExpr::constant(2);
        } else {
            out.class_expr = ClassExpr::of_atom(Atom::etale({2}));
        }
        out.trace.add(identity_step("quadric.binary",
                                    split ? "split binary form: two rational points" : "anisotropic binary form: a conjugate pair",
                                    field, {term(out.input)}, split ? std::vector{constant(2)} : std::vector<CountTerm>{}));
        return out;
    }

    const auto point = find_projective_point(q, options.height, options.count);
    out.hypotheses.push_back({"rational point on the quadric", point.has_value()});
    if (!point) {
        out.class_expr = ClassExpr::of_atom(variety_atom(n, {f}));
        return out;
    }
    const auto hn = hyperbolic_normalize(q, *point);
    const HomogPoly g = linear_substitute(f, hn.transform);
    const HomogPoly qprime = hn.residual.to_poly();
    const HomogPoly qprime_wide = embed_variables(qprime, n + 1, iota(2, n + 1));
    if (!(g == HomogPoly::variable(field, n + 1, 0) * HomogPoly::variable(field, n + 1, 1) + qprime_wide)) {
        defect("hyperbolic normalization did not produce x0*x1 + q'");
    }
    const StratResult sub = class_of_quadric(qprime, options);
    out.class_expr = ClassExpr::constant(1) + sub.class_expr.lshift(1) + ClassExpr::lefschetz(n - 1);

    const CountQuery gq = locus(field, n, {g});
    out.trace.add(identity_step("quadric.hyperbolic", "coordinates with q = x0*x1 + q'(x2..xn)", field,
                                {term(out.input)}, {term(gq)}));
    out.trace.add(identity_step("quadric.smooth", "x0 = 0 gives the point [0:1:0..0] and a cone over V(q'); x0 != 0 gives A^{n-1}",
                                field, {term(gq)},
                                {constant(1), term(locus(field, n - 2, {qprime}), 1, 1), constant(1, n - 1)}));
    out.trace.add(identity_step("quadric.chart", "the chart x0 != 0 is the graph x1 = -q'", field,
                                {term(locus(field, n, {g}, {{0, Chart::nonzero}}))}, {constant(1, n - 1)}));
    out.trace.append(sub.trace, "Y/");
    append_hypotheses(out, sub, "Y: ");
    return out;
}

std::vector<HomogPoly> distinct_forms(const std::vector<HomogPoly>& forms) {
    if (forms.empty()) fail("arrangement needs at least one form");
    require_same_ring(forms);
    std::vector<HomogPoly> out;
    for (const auto& h : forms) {
        if (h.degree() != 1) fail("arrangement forms must be linear");
        if (h.is_zero()) fail("zero form in arrangement");
        HomogPoly m = h.monic();
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    }
    return out;
}

std::size_t rank_of(const std::vector<HomogPoly>& forms) {
    std::vector<Vector> rows;
    for (const auto& h : forms) rows.push_back(h.linear_coefficients());
    return rank(Matrix::from_rows(forms.front().field(), rows, forms.front().nvars()));
}

}  // namespace

StratResult class_of_quadric(const HomogPoly& f, const SearchOptions& options) {
    if (f.degree() != 2) fail("wrong degree: expected a quadric, got degree " + std::to_string(f.degree()));
    if (f.is_zero()) fail("zero polynomial");
    if (f.field().characteristic() == 2) fail("characteristic 2 is not supported");
    const Field field = f.field();
    const unsigned n = f.nvars() - 1;
    const QuadForm q = QuadForm::from_poly(f);
    const Diagonalization d = diagonalize(q);

    if (d.rank == f.nvars()) {
        StratResult out = quadric_nondegenerate(f, q, options);
        out.hypotheses.insert(out.hypotheses.begin(), Hypothesis{"degree 2 <= n", n >= 2});
        out.residue = residue_mod_L(out.class_expr);
        return out;
    }

    StratResult out{locus(field, n, {f})};
    out.hypotheses.push_back({"degree 2 <= n", n >= 2});
    const auto r1 = static_cast<unsigned>(d.rank);
    const HomogPoly fd = linear_substitute(f, d.transform);
    if (!(fd == diagonal_form(field, n + 1, std::span(d.diagonal).first(r1)))) defect("diagonalization mismatch");
    const HomogPoly y = diagonal_form(field, r1, std::span(d.diagonal).first(r1));
    const StratResult sub = class_of_quadric(y, options);
    out.class_expr = projective_space_class(static_cast<int>(n - r1)) + sub.class_expr.lshift(n - r1 + 1);

    const CountQuery dq = locus(field, n, {fd});
    out.trace.add(identity_step("quadric.diagonalize", "diagonal coordinates a0*x0^2 + ... + ar*xr^2", field,
                                {term(out.input)}, {term(dq)}));
    out.trace.add(identity_step("quadric.radical", "V(q) is a cone with vertex P^{n-r-1} over the nondegenerate Y in P^r",
                                field, {term(dq)},
                                {term(locus(field, n - r1, {})), term(locus(field, r1 - 1, {y}), 1, n - r1 + 1)}));
    out.trace.append(sub.trace, "Y/");
    append_hypotheses(out, sub, "Y: ");
    out.residue = residue_mod_L(out.class_expr);
    return out;
}

ClassExpr arrangement_inclusion_exclusion(const std::vector<HomogPoly>& forms) {
    const auto dist = distinct_forms(forms);
    const int n = static_cast<int>(dist.front().nvars()) - 1;
    if (dist.size() > 20) fail("too many hyperplanes for inclusion-exclusion");
    ClassExpr total;
    for (std::uint32_t mask = 1; mask < (1U << dist.size()); ++mask) {
        std::vector<HomogPoly> subset;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            if (mask & (1U << i)) subset.push_back(dist[i]);
        }
        const int dim = n - static_cast<int>(rank_of(subset));
        if (dim < 0) continue;
        const long long sign = subset.size() % 2 == 1 ? 1 : -1;
        total = total + projective_space_class(dim).scaled(sign);
    }
    return total;
}

StratResult class_of_arrangement(const std::vector<HomogPoly>& forms, const SearchOptions&) {
    const auto dist = distinct_forms(forms);
    const Field field = dist.front().field();
    const unsigned n = dist.front().nvars() - 1;
    const auto d = static_cast<unsigned>(dist.size());

    std::vector<Vector> rows;
    for (const auto& h : dist) rows.push_back(h.linear_coefficients());
    const Matrix a = Matrix::from_rows(field, rows, n + 1);
    const auto r = static_cast<unsigned>(rank(a));
    const auto kernel = nullspace(a);
    const Matrix e = extend_to_basis(field, kernel, n + 1);
    std::vector<Vector> cols;
    for (std::size_t j = kernel.size(); j < n + 1; ++j) cols.push_back(e.column(j));
    for (std::size_t j = 0; j < kernel.size(); ++j) cols.push_back(e.column(j));
    const Matrix m = Matrix::from_columns(field, cols, n + 1);

    std::vector<HomogPoly> moved, compressed;
    for (const auto& h : dist) {
        moved.push_back(linear_substitute(h, m));
        compressed.push_back(select_variables(moved.back(), iota(0, r)));
    }
    const ClassExpr z = arrangement_inclusion_exclusion(compressed);

    StratResult out{locus(field, n, {product(dist)})};
    out.hypotheses.push_back({"d <= n", d <= n});
    const CountQuery moved_q = locus(field, n, {product(moved)});
    out.trace.add(identity_step("arrangement.coordinates", "coordinates with the common zero locus at x0 = ... = x_{r-1} = 0",
                                field, {term(out.input)}, {term(moved_q)}));
    const CountTerm z_term = term(locus(field, r - 1, {product(compressed)}), 1, n + 1 - r);
    if (r <= n) {
        out.class_expr = projective_space_class(static_cast<int>(n - r)) + z.lshift(n - r + 1);
        out.trace.add(identity_step("arrangement.fibration",
                                    "X is Y = P^{n-r} plus an A^{n-r+1}-bundle over Z = V(h1'...hd') in P^{r-1}", field,
                                    {term(moved_q)}, {term(locus(field, n - r, {})), z_term}));
    } else {
        out.class_expr = z;
        out.trace.add(identity_step("arrangement.fibration", "the hyperplanes have no common point; X = Z", field,
                                    {term(moved_q)}, {z_term}));
    }
    if (d <= 8) {
        std::vector<CountTerm> rhs;
        for (std::uint32_t mask = 1; mask < (1U << d); ++mask) {
            std::vector<HomogPoly> subset;
            for (unsigned i = 0; i < d; ++i) {
                if (mask & (1U << i)) subset.push_back(dist[i]);
            }
            rhs.push_back(term(locus(field, n, subset), subset.size() % 2 == 1 ? 1 : -1));
        }
        out.trace.add(identity_step("arrangement.inclusion-exclusion", "scissor relation over the intersection lattice",
                                    field, {term(out.input)}, std::move(rhs)));
    }
    out.residue = residue_mod_L(out.class_expr);
    return out;
}

StratResult class_of_cone(const std::vector<HomogPoly>& z_generators, const SearchOptions&) {
    if (z_generators.empty()) fail("cone needs at least one generator for Z");
    require_same_ring(z_generators);
    for (const auto& g : z_generators) {
        if (g.degree() == 0) fail("cone generators must have positive degree");
    }
    const Field field = z_generators.front().field();
    const unsigned n = z_generators.front().nvars();
    if (n == 0) fail("cone base needs at least one variable");

    std::vector<HomogPoly> x_gens;
    for (const auto& g : z_generators) x_gens.push_back(embed_variables(g, n + 1, iota(0, n)));
    const ClassExpr z = variety_class(field, n - 1, z_generators);

    StratResult out{locus(field, n, x_gens)};
    out.class_expr = ClassExpr::constant(1) + z.lshift(1);

    std::vector<ChartConstraint> apex;
    for (unsigned i = 0; i < n; ++i) apex.push_back({i, Chart::zero});
    out.trace.add(identity_step("cone.apex", "the apex [0:...:0:1] is the only point with x0 = ... = x_{n-1} = 0", field,
                                {term(locus(field, n, x_gens, apex))}, {constant(1)}));
    out.trace.add(identity_step("cone.fibration", "X minus the apex is an A^1-bundle over Z", field, {term(out.input)},
                                {constant(1), term(locus(field, n - 1, z_generators), 1, 1)}));
    out.residue = residue_mod_L(out.class_expr);
    return out;
}

std::optional<Vector> find_singular_rational_point(const HomogPoly& f, const SearchOptions& options) {
    if (f.nvars() == 0) fail("polynomial without variables");
    std::vector<HomogPoly> gens{f};
    for (unsigned i = 0; i < f.nvars(); ++i) gens.push_back(partial_derivative(f, i));
    std::optional<Vector> found;
    auto visit = [&](std::span<const Elem> p) {
        for (const auto& g : gens) {
            if (!g.evaluate(p).is_zero()) return true;
        }
        found = Vector(p.begin(), p.end());
        return false;
    };
    if (f.field().is_finite()) {
        for_each_point(CountQuery{f.field(), f.nvars() - 1, nonzero(gens), {}}, visit, options.count);
    } else {
        for_each_bounded_height_point(f.field(), f.nvars(), options.height, visit);
    }
    return found;
}

StratResult class_of_singular_cubic(const HomogPoly& f, std::optional<Vector> point, const SearchOptions& options) {
    if (f.degree() != 3) fail("wrong degree: expected a cubic, got degree " + std::to_string(f.degree()));
    if (f.is_zero()) fail("zero polynomial");
    const Field field = f.field();
    const unsigned n = f.nvars() - 1;
    if (n == 0) fail("cubic in P^0");

    if (!point) {
        point = find_singular_rational_point(f, options);
        if (!point) fail("no singular rational point found");
    }
    const Vector& x = *point;
    if (x.size() != f.nvars()) fail("point has the wrong number of coordinates");
    if (std::all_of(x.begin(), x.end(), [](const Elem& e) { return e.is_zero(); })) fail("point is zero");
    for (const auto& e : x) {
        if (!(e.field() == field)) fail("point lives over a different field");
    }
    if (!f.evaluate(x).is_zero()) fail("point not on X");
    for (unsigned i = 0; i < f.nvars(); ++i) {
        if (!partial_derivative(f, i).evaluate(x).is_zero()) fail("point not singular");
    }

    const std::vector<Vector> first{x};
    const Matrix e = extend_to_basis(field, first, n + 1);
    std::vector<Vector> cols;
    for (unsigned j = 1; j <= n; ++j) cols.push_back(e.column(j));
    cols.push_back(x);
    const Matrix m = Matrix::from_columns(field, cols, n + 1);
    const HomogPoly g = linear_substitute(f, m);
    const auto parts = split_by_variable(g, n);
    if (!parts[3].is_zero() || !parts[2].is_zero()) defect("singular point did not kill the x_n^3 and x_n^2 terms");
    const auto base = iota(0, n);
    const HomogPoly f2 = select_variables(parts[1], base);
    const HomogPoly f3 = select_variables(parts[0], base);

    StratResult out{locus(field, n, {f})};
    out.hypotheses.push_back({"n >= 3", n >= 3});
    out.hypotheses.push_back({"rational singular point", true});
    const CountQuery gq = locus(field, n, {g});
    out.trace.add(identity_step("cubic.coordinates", "coordinates with the singular point at [0:...:0:1]", field,
                                {term(out.input)}, {term(gq)}));

    if (f2.is_zero()) {
        const StratResult cone = class_of_cone({f3}, options);
        out.class_expr = cone.class_expr;
        out.hypotheses.push_back({"f2 = 0: cone over V(f3)", true});
        out.trace.append(cone.trace, "cone/");
        out.residue = residue_mod_L(out.class_expr);
        return out;
    }

    const StratResult quad = class_of_quadric(f2, options);
    const std::vector<HomogPoly> z_gens{f2, f3};
    out.class_expr = ClassExpr::constant(1) + projective_space_class(static_cast<int>(n - 1)) - quad.class_expr +
                     ClassExpr::of_atom(variety_atom(n - 1, z_gens), 1);

    std::vector<ChartConstraint> apex;
    for (unsigned i = 0; i < n; ++i) apex.push_back({i, Chart::zero});
    out.trace.add(identity_step("cubic.apex", "the singular point is the only point of X with x0 = ... = x_{n-1} = 0",
                                field, {term(locus(field, n, {g}, apex))}, {constant(1)}));
    out.trace.add(identity_step("cubic.strata",
                                "apex, a section over P^{n-1} minus V(f2), and an A^1-bundle over V(f2, f3)", field,
                                {term(gq)},
                                {constant(1), term(locus(field, n - 1, {})), term(locus(field, n - 1, {f2}), -1),
                                 term(locus(field, n - 1, nonzero(z_gens)), 1, 1)}));
    out.trace.append(quad.trace, "f2/");
    append_hypotheses(out, quad, "f2: ");
    out.residue = residue_mod_L(out.class_expr);
    return out;
}

namespace {

void require_quadric_pair(const HomogPoly& q1, const HomogPoly& q2) {
    require_same_ring({q1, q2});
    if (q1.degree() != 2 || q2.degree() != 2) fail("wrong degree: expected two quadrics");
    if (q1.is_zero() || q2.is_zero()) fail("zero polynomial");
    if (!q1.field().is_finite()) fail("two-quadric unions are only supported over finite fields");
}

}  // namespace

TwoQuadricNormalForm normalize_two_quadrics(const HomogPoly& q1, const HomogPoly& q2, const SearchOptions& options) {
    require_quadric_pair(q1, q2);
    const Field field = q1.field();
    const unsigned n = q1.nvars() - 1;
    if (q1.monic() == q2.monic()) fail("q1 and q2 are proportional");
    const QuadForm form1 = QuadForm::from_poly(q1);
    if (!form1.is_nondegenerate()) fail("Q1 not smooth");

    std::optional<Vector> x;
    for_each_point(locus(field, n, {q1, q2}),
                   [&](std::span<const Elem> p) {
                       x = Vector(p.begin(), p.end());
                       return false;
                   },
                   options.count);
    if (!x) fail("no rational point on Q1 and Q2");

    TwoQuadricNormalForm nf{*x, hyperbolic_normalize(form1, *x).transform, q1, q2, q1, q1, q1, q1, q1};
    nf.q1 = linear_substitute(q1, nf.transform);
    nf.q2 = linear_substitute(q2, nf.transform);
    const HomogPoly x0 = HomogPoly::variable(field, n + 1, 0);
    const HomogPoly x1 = HomogPoly::variable(field, n + 1, 1);
    nf.h = x0 * x1 - nf.q1;
    if (nf.h.uses_variable(0) || nf.h.uses_variable(1)) defect("hyperbolic normalization left x0 or x1 in h");

    const auto by_x1 = split_by_variable(nf.q2, 1);
    if (!by_x1[2].is_zero()) defect("x1^2 appears in q2 after normalization");
    nf.l1 = by_x1[1];
    const auto by_x0 = split_by_variable(by_x1[0], 0);
    nf.r = by_x0[0];
    nf.l0 = by_x0[1] + by_x0[2] * x0;
    if (nf.l1.is_zero()) fail("unsupported configuration: L1 = 0");

    const HomogPoly g = x0 * x0 * nf.l0 + nf.h * nf.l1 + x0 * nf.r;
    if (g.is_zero()) fail("unsupported configuration: g = 0");
    std::vector<unsigned> yvars{0};
    for (unsigned j = 2; j <= n; ++j) yvars.push_back(j);
    nf.gbar = select_variables(g, yvars);
    return nf;
}

StratResult class_of_two_quadric_union(const HomogPoly& q1, const HomogPoly& q2, const SearchOptions& options) {
    require_quadric_pair(q1, q2);
    const Field field = q1.field();
    const unsigned n = q1.nvars() - 1;
    if (n < 4) fail("two-quadric unions need n >= 4");

    if (q1.monic() == q2.monic()) {
        StratResult out = class_of_quadric(q1, options);
        out.trace.add(identity_step("two-quadrics.equal", "Q1 = Q2, so X = Q1", field,
                                    {term(locus(field, n, {q1 * q2}))}, {term(out.input)}));
        out.input = locus(field, n, {q1 * q2});
        out.hypotheses.push_back({"Q1 = Q2", true});
        return out;
    }

    const TwoQuadricNormalForm nf = normalize_two_quadrics(q1, q2, options);
    std::vector<unsigned> yvars{0};
    for (unsigned j = 2; j <= n; ++j) yvars.push_back(j);
    const auto tail = iota(2, n + 1);
    const HomogPoly hy = select_variables(nf.h, yvars);
    const HomogPoly l1y = select_variables(nf.l1, yvars);
    const HomogPoly ry = select_variables(nf.r, yvars);
    const HomogPoly y1 = HomogPoly::variable(field, n, 0);
    const HomogPoly l1_tail = split_by_variable(nf.l1, 0)[0];

    StratResult out{locus(field, n, {q1 * q2})};
    out.hypotheses.push_back({"Q1 smooth", true});
    out.hypotheses.push_back({"n >= 4", true});
    out.hypotheses.push_back({"rational point on Q1 and Q2", true});

    const CountQuery inter = locus(field, n, {q1, q2});
    const CountQuery inter_n = locus(field, n, {nf.q1, nf.q2});
    const CountQuery inter_nz = locus(field, n, {nf.q1, nf.q2}, {{0, Chart::nonzero}});
    const CountQuery inter_z = locus(field, n, {nf.q1, nf.q2}, zeros({0}));
    const CountQuery y = locus(field, n - 1, {nf.gbar});
    const CountQuery y0 = locus(field, n - 1, {nf.gbar}, zeros({0}));

    out.trace.add(identity_step("two-quadrics.A", "X = Q1 union Q2", field, {term(out.input)},
                                {term(locus(field, n, {q1})), term(locus(field, n, {q2})), term(inter, -1)}));
    out.trace.add(identity_step("two-quadrics.coordinates", "coordinates with q1 = x0*x1 - h and q2 = x0*L0 + x1*L1 + R",
                                field, {term(inter)}, {term(inter_n)}));
    out.trace.add(identity_step("two-quadrics.B", "split Q1 and Q2 along the charts x0 != 0 and x0 = 0", field,
                                {term(inter_n)}, {term(inter_nz), term(inter_z)}));
    const TraceStep c_step = identity_step("two-quadrics.C", "the chart x0 != 0 is Y minus its hyperplane y1 = 0", field,
                                           {term(inter_nz)}, {term(y), term(y0, -1)});
    if (!evaluate_identity(*c_step.identity, options.count).balanced()) {
        fail("unsupported configuration: chart isomorphism check failed");
    }
    out.trace.add(c_step);
    out.trace.add(identity_step("two-quadrics.D", "on y1 = 0, Y is V(h) union V(L1)", field, {term(y0)},
                                {term(locus(field, n - 1, {hy}, zeros({0}))), term(locus(field, n - 1, {l1y}, zeros({0}))),
                                 term(locus(field, n - 1, {hy, l1y}, zeros({0})), -1)}));
    out.trace.add(identity_step(
        "two-quadrics.E", "x0 = 0: the point [0:1:0..0], a section over V(h) minus V(L1), an A^1-bundle over V(L1, R, h)",
        field, {term(inter_z)},
        {term(locus(field, n, {nf.h}, zeros({0, 1}))), term(locus(field, n, {nf.h, nf.l1}, zeros({0, 1})), -1),
         term(locus(field, n, nonzero({nf.l1, nf.r, nf.h}), zeros({0, 1})), 1, 1), constant(1)}));

    bool contained = true;
    std::uint64_t s_points = 0;
    std::vector<HomogPoly> sing{nf.gbar};
    for (unsigned i = 0; i < n; ++i) sing.push_back(partial_derivative(nf.gbar, i));
    for_each_point(locus(field, n - 1, nonzero({y1, hy, l1y, ry})),
                   [&](std::span<const Elem> p) {
                       ++s_points;
                       for (const auto& g : sing) {
                           if (!g.evaluate(p).is_zero()) contained = false;
                       }
                       return true;
                   },
                   options.count);
    out.trace.add(TraceStep{"two-quadrics.F",
                            "every point of S = V(y1, h, L1, R) is singular on Y (" + std::to_string(s_points) + " points)",
                            std::nullopt, contained});
    out.hypotheses.push_back({"S in Sing(Y)", contained});

    const StratResult c1 = class_of_quadric(q1, options);
    const StratResult c2 = class_of_quadric(q2, options);
    ClassExpr y_class;
    const auto sp = find_singular_rational_point(nf.gbar, options);
    out.hypotheses.push_back({"Y has a rational singular point", sp.has_value()});
    std::optional<StratResult> ys;
    if (sp) {
        ys = class_of_singular_cubic(nf.gbar, sp, options);
        y_class = ys->class_expr;
    } else {
        y_class = ClassExpr::of_atom(variety_atom(n - 1, {nf.gbar}));
    }
    const HomogPoly l1c = select_variables(l1_tail, tail);
    const ClassExpr l1_class = l1c.is_zero() ? projective_space_class(static_cast<int>(n - 2))
                                             : projective_space_class(static_cast<int>(n - 3));
    const std::vector<HomogPoly> triple{l1c, select_variables(nf.r, tail), select_variables(nf.h, tail)};
    const ClassExpr inter_class =
        y_class - l1_class + ClassExpr::of_atom(variety_atom(n - 2, triple), 1) + ClassExpr::constant(1);
    out.class_expr = c1.class_expr + c2.class_expr - inter_class;

    out.trace.append(c1.trace, "Q1/");
    out.trace.append(c2.trace, "Q2/");
    if (sp) {
        out.trace.append(ys->trace, "Y/");
        append_hypotheses(out, *ys, "Y: ");
    }
    out.residue = residue_mod_L(out.class_expr);
    return out;
}

// ---------------------------------------------------------------------------

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::skipped:
            return "skipped";
    }
    return "skipped";
}

bool Verification::passed() const {
    if (master == CheckStatus::fail) return false;
    return std::none_of(steps.begin(), steps.end(), [](const StepCheck& s) { return s.status == CheckStatus::fail; });
}

Verification verify(const StratResult& result, const CountOptions& options) {
    Verification v;
    const bool finite = result.input.field.is_finite();
    if (finite) {
        v.oracle = static_cast<long long>(count_points(result.input, options));
        v.measure = count_measure(result.class_expr, result.input.field.order(), options);
        v.master = *v.oracle == *v.measure ? CheckStatus::pass : CheckStatus::fail;
    }
    for (const auto& step : result.trace.steps) {
        StepCheck check{step.tag, step.description, CheckStatus::skipped, std::nullopt};
        if (step.check_passed) {
            check.status = *step.check_passed ? CheckStatus::pass : CheckStatus::fail;
        } else if (step.identity && finite) {
            check.value = evaluate_identity(*step.identity, options);
            check.status = check.value->balanced() ? CheckStatus::pass : CheckStatus::fail;
        }
        v.steps.push_back(std::move(check));
    }
    return v;
}

}  // namespace kzero
