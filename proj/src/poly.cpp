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

#include "kzero/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kzero/error.hpp"

namespace kzero {

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

using TermMap = std::map<Exponents, Elem, GrlexGreater>;

void accumulate_term(TermMap& map, const Exponents& exps, const Elem& c) {
    if (c.is_zero()) return;
    auto it = map.find(exps);
    if (it == map.end()) {
        map.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) map.erase(it);
}

std::vector<Term> to_terms(TermMap&& map) {
    std::vector<Term> out;
    out.reserve(map.size());
    for (auto& [e, c] : map) out.push_back(Term{e, c});
    return out;
}

Elem evaluate_terms(Field field, unsigned nvars, std::span<const Term> terms, std::span<const Elem> point) {
    if (point.size() != nvars) fail("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                    std::to_string(nvars));
    Elem sum(field);
    for (const auto& t : terms) {
        Elem prod = t.coefficient;
        for (unsigned i = 0; i < nvars; ++i) {
            if (t.exponents[i] == 0) continue;
            if (!(point[i].field() == field)) fail("point field mismatch");
            prod *= point[i].pow(t.exponents[i]);
        }
        sum += prod;
    }
    return sum;
}

void check_compatible(const HomogPoly& a, const HomogPoly& b) {
    if (!(a.field() == b.field())) fail("polynomial field mismatch");
    if (a.nvars() != b.nvars()) fail("polynomial variable count mismatch");
}

}  // namespace

bool grlex_greater(const Exponents& a, const Exponents& b) {
    const unsigned da = total(a), db = total(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

HomogPoly::HomogPoly(Field field, unsigned nvars, unsigned degree) : field_(field), nvars_(nvars), degree_(degree) {}

HomogPoly HomogPoly::from_terms(Field field, unsigned nvars, unsigned degree, std::vector<Term> terms) {
    TermMap map;
    for (const auto& t : terms) {
        if (t.exponents.size() != nvars) fail("exponent vector length mismatch");
        if (total(t.exponents) != degree) fail("not homogeneous");
        if (!(t.coefficient.field() == field)) fail("coefficient field mismatch");
        accumulate_term(map, t.exponents, t.coefficient);
    }
    HomogPoly out(field, nvars, degree);
    out.terms_ = to_terms(std::move(map));
    return out;
}

HomogPoly HomogPoly::variable(Field field, unsigned nvars, unsigned index) {
    if (index >= nvars) fail("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return from_terms(field, nvars, 1, {Term{e, Elem::from_int(field, 1)}});
}

HomogPoly HomogPoly::linear(std::span<const Elem> coeffs) {
    if (coeffs.empty()) fail("linear form needs at least one variable");
    const Field field = coeffs.front().field();
    const auto nvars = static_cast<unsigned>(coeffs.size());
    std::vector<Term> terms;
    for (unsigned i = 0; i < nvars; ++i) {
        Exponents e(nvars, 0);
        e[i] = 1;
        terms.push_back(Term{e, coeffs[i]});
    }
    return from_terms(field, nvars, 1, std::move(terms));
}

HomogPoly HomogPoly::constant(Field field, unsigned nvars, const Elem& value) {
    return from_terms(field, nvars, 0, {Term{Exponents(nvars, 0), value}});
}

Elem HomogPoly::coefficient(const Exponents& exps) const {
    for (const auto& t : terms_) {
        if (t.exponents == exps) return t.coefficient;
    }
    return Elem(field_);
}

Elem HomogPoly::evaluate(std::span<const Elem> point) const { return evaluate_terms(field_, nvars_, terms_, point); }

Vector HomogPoly::linear_coefficients() const {
    if (degree_ != 1) fail("linear coefficients of a form of degree " + std::to_string(degree_));
    Vector out(nvars_, Elem(field_));
    for (const auto& t : terms_) {
        for (unsigned i = 0; i < nvars_; ++i) {
            if (t.exponents[i] == 1) out[i] = t.coefficient;
        }
    }
    return out;
}

bool HomogPoly::uses_variable(unsigned index) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exponents[index] > 0; });
}

HomogPoly HomogPoly::scaled(const Elem& c) const {
    HomogPoly out(field_, nvars_, degree_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coefficient *= c;
    return out;
}

HomogPoly HomogPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(terms_.front().coefficient.inverse());
}

HomogPoly HomogPoly::cast(Field target) const {
    HomogPoly out(target, nvars_, degree_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coefficient = t.coefficient.cast(target);
    return out;
}

HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
    check_compatible(a, b);
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero()) fail("adding forms of different degrees");
    const unsigned degree = a.is_zero() ? b.degree_ : a.degree_;
    TermMap map;
    for (const auto& t : a.terms_) accumulate_term(map, t.exponents, t.coefficient);
    for (const auto& t : b.terms_) accumulate_term(map, t.exponents, t.coefficient);
    HomogPoly out(a.field_, a.nvars_, degree);
    out.terms_ = to_terms(std::move(map));
    return out;
}

HomogPoly operator-(const HomogPoly& a) { return a.scaled(-Elem::from_int(a.field_, 1)); }

HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) { return a + (-b); }

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    check_compatible(a, b);
    TermMap map;
    Exponents e(a.nvars_, 0);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ta.exponents[i] + tb.exponents[i];
            accumulate_term(map, e, ta.coefficient * tb.coefficient);
        }
    }
    HomogPoly out(a.field_, a.nvars_, a.degree_ + b.degree_);
    out.terms_ = to_terms(std::move(map));
    return out;
}

// ---------------------------------------------------------------------------

AffinePoly::AffinePoly(Field field, unsigned nvars) : field_(field), nvars_(nvars) {}

AffinePoly AffinePoly::from_terms(Field field, unsigned nvars, std::vector<Term> terms) {
    TermMap map;
    for (const auto& t : terms) {
        if (t.exponents.size() != nvars) fail("exponent vector length mismatch");
        accumulate_term(map, t.exponents, t.coefficient);
    }
    AffinePoly out(field, nvars);
    out.terms_ = to_terms(std::move(map));
    return out;
}

unsigned AffinePoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, total(t.exponents));
    return d;
}

Elem AffinePoly::evaluate(std::span<const Elem> point) const { return evaluate_terms(field_, nvars_, terms_, point); }

// ---------------------------------------------------------------------------

HomogPoly linear_substitute(const HomogPoly& f, const Matrix& m) {
    const unsigned n = f.nvars();
    if (m.rows() != n || m.cols() != n) fail("substitution matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!(m.field() == f.field())) fail("substitution matrix field mismatch");
    std::vector<HomogPoly> images;
    images.reserve(n);
    for (unsigned i = 0; i < n; ++i) images.push_back(HomogPoly::linear(m.row(i)));
    const HomogPoly one = HomogPoly::constant(f.field(), n, Elem::from_int(f.field(), 1));
    HomogPoly out(f.field(), n, f.degree());
    for (const auto& t : f.terms()) {
        HomogPoly prod = one.scaled(t.coefficient);
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned k = 0; k < t.exponents[i]; ++k) prod = prod * images[i];
        }
        out = out + prod;
    }
    return out;
}

HomogPoly partial_derivative(const HomogPoly& f, unsigned index) {
    if (index >= f.nvars()) fail("variable index out of range");
    const unsigned degree = f.degree() == 0 ? 0 : f.degree() - 1;
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (t.exponents[index] == 0) continue;
        Exponents e = t.exponents;
        --e[index];
        terms.push_back(Term{e, t.coefficient * Elem::from_int(f.field(), t.exponents[index])});
    }
    return HomogPoly::from_terms(f.field(), f.nvars(), degree, std::move(terms));
}

std::vector<HomogPoly> split_by_variable(const HomogPoly& f, unsigned index) {
    if (index >= f.nvars()) fail("variable index out of range");
    std::vector<std::vector<Term>> buckets(f.degree() + 1);
    for (const auto& t : f.terms()) {
        Exponents e = t.exponents;
        const unsigned k = e[index];
        e[index] = 0;
        buckets[k].push_back(Term{e, t.coefficient});
    }
    std::vector<HomogPoly> parts;
    for (unsigned k = 0; k <= f.degree(); ++k) {
        parts.push_back(HomogPoly::from_terms(f.field(), f.nvars(), f.degree() - k, std::move(buckets[k])));
    }
    return parts;
}

AffinePoly dehomogenize(const HomogPoly& f, unsigned index) {
    if (index >= f.nvars()) fail("chart index out of range");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Exponents e;
        for (unsigned i = 0; i < f.nvars(); ++i) {
            if (i != index) e.push_back(t.exponents[i]);
        }
        terms.push_back(Term{e, t.coefficient});
    }
    return AffinePoly::from_terms(f.field(), f.nvars() - 1, std::move(terms));
}

HomogPoly homogenize(const AffinePoly& g, unsigned index) {
    if (g.is_zero()) fail("cannot homogenize the zero polynomial");
    if (index > g.nvars()) fail("homogenizing variable position out of range");
    const unsigned degree = g.total_degree();
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
        Exponents e = t.exponents;
        e.insert(e.begin() + index, degree - total(t.exponents));
        terms.push_back(Term{e, t.coefficient});
    }
    return HomogPoly::from_terms(g.field(), g.nvars() + 1, degree, std::move(terms));
}

HomogPoly select_variables(const HomogPoly& f, std::span<const unsigned> vars) {
    std::vector<bool> kept(f.nvars(), false);
    for (unsigned v : vars) {
        if (v >= f.nvars()) fail("variable index out of range");
        kept[v] = true;
    }
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        for (unsigned i = 0; i < f.nvars(); ++i) {
            if (!kept[i] && t.exponents[i] > 0) fail("form involves a dropped variable x" + std::to_string(i));
        }
        Exponents e;
        for (unsigned v : vars) e.push_back(t.exponents[v]);
        terms.push_back(Term{e, t.coefficient});
    }
    return HomogPoly::from_terms(f.field(), static_cast<unsigned>(vars.size()), f.degree(), std::move(terms));
}

HomogPoly embed_variables(const HomogPoly& f, unsigned nvars, std::span<const unsigned> target) {
    if (target.size() != f.nvars()) fail("embedding needs one target per variable");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Exponents e(nvars, 0);
        for (unsigned i = 0; i < f.nvars(); ++i) {
            if (target[i] >= nvars) fail("embedding target out of range");
            e[target[i]] += t.exponents[i];
        }
        terms.push_back(Term{e, t.coefficient});
    }
    return HomogPoly::from_terms(f.field(), nvars, f.degree(), std::move(terms));
}

}  // namespace kzero
