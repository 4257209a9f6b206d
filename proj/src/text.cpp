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

#include "kzero/text.hpp"

#include <cctype>
#include <map>

#include "kzero/error.hpp"

namespace kzero {

namespace {

// Intermediate value while parsing: a possibly inhomogeneous polynomial.
using Expr = std::map<Exponents, Elem>;

class Parser {
  public:
    Parser(std::string_view src, Field field, unsigned nvars) : src_(src), field_(field), nvars_(nvars) {}

    Expr parse_all() {
        Expr e = sum();
        skip_ws();
        if (pos_ != src_.size()) error("unexpected character '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

  private:
    [[noreturn]] void error(const std::string& what) const {
        fail("syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Expr constant(const Elem& c) const {
        Expr e;
        if (!c.is_zero()) e.emplace(Exponents(nvars_, 0), c);
        return e;
    }

    static void add_into(Expr& acc, const Expr& b, bool negate) {
        for (const auto& [exps, c] : b) {
            const Elem v = negate ? -c : c;
            auto it = acc.find(exps);
            if (it == acc.end()) {
                acc.emplace(exps, v);
            } else {
                it->second += v;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }

    Expr multiply(const Expr& a, const Expr& b) const {
        Expr out;
        for (const auto& [ea, ca] : a) {
            for (const auto& [eb, cb] : b) {
                Exponents e(nvars_);
                for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                add_into(out, Expr{{e, ca * cb}}, false);
            }
        }
        return out;
    }

    Expr sum() {
        Expr acc;
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        add_into(acc, term(), negate);
        for (;;) {
            if (accept('+')) {
                add_into(acc, term(), false);
            } else if (accept('-')) {
                add_into(acc, term(), true);
            } else {
                return acc;
            }
        }
    }

    Expr term() {
        Expr acc = power();
        while (accept('*')) acc = multiply(acc, power());
        return acc;
    }

    Expr power() {
        Expr base = factor();
        if (!accept('^')) return base;
        const unsigned long e = integer_value();
        Expr out = constant(Elem::from_int(field_, 1));
        for (unsigned long i = 0; i < e; ++i) out = multiply(out, base);
        return out;
    }

    unsigned long integer_value() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        const std::string digits(src_.substr(start, pos_ - start));
        if (digits.size() > 9) error("exponent or index too large");
        return std::stoul(digits);
    }

    Elem number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const mpz_class value(std::string(src_.substr(start, pos_ - start)));
        if (!field_.is_finite()) return Elem::from_rational(field_, mpq_class(value));
        const mpz_class reduced = value % field_.characteristic();
        return Elem::from_int(field_, reduced.get_si());
    }

    Expr factor() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Elem value = number();
            if (accept('/')) {
                if (field_.is_finite()) error("fractions are only allowed over Q");
                if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a denominator");
                const Elem den = number();
                if (den.is_zero()) error("zero denominator");
                value = value / den;
            }
            return constant(value);
        }
        if (c == 't') {
            ++pos_;
            if (field_.kind() != FieldKind::extension) error("generator t needs an extension field");
            return constant(Elem::generator(field_));
        }
        if (c == 'x') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a variable index after x");
            const unsigned long index = integer_value();
            if (index >= nvars_) {
                error("unknown variable x" + std::to_string(index) + " (only " + std::to_string(nvars_) +
                      " variables)");
            }
            Exponents e(nvars_, 0);
            e[index] = 1;
            return Expr{{e, Elem::from_int(field_, 1)}};
        }
        if (c == '(') {
            ++pos_;
            Expr inner = sum();
            if (!accept(')')) error("expected ')'");
            return inner;
        }
        if (c == '\0') error("unexpected end of input");
        error("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Field field_;
    unsigned nvars_;
};

struct Signed {
    bool negative;
    std::string magnitude;  // "1" for unit coefficients
};

Signed signed_coefficient(const Elem& c) {
    const Field f = c.field();
    if (!f.is_finite()) {
        const mpq_class& v = c.rational();
        return Signed{v < 0, mpq_class(abs(v)).get_str()};
    }
    if (c.in_prime_subfield()) {
        const std::uint64_t p = f.characteristic();
        const std::uint64_t v = c.index();
        if (v > p / 2) return Signed{true, std::to_string(p - v)};
        return Signed{false, std::to_string(v)};
    }
    const std::string text = c.to_string();
    if (text.find('+') == std::string::npos) return Signed{false, text};
    return Signed{false, "(" + text + ")"};
}

std::string render(std::span<const Term> terms, const char* var) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        const Signed s = signed_coefficient(t.coefficient);
        std::string monomial;
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += var + std::to_string(i);
            if (t.exponents[i] > 1) monomial += "^" + std::to_string(t.exponents[i]);
        }
        if (first) {
            if (s.negative) out += "-";
        } else {
            out += s.negative ? " - " : " + ";
        }
        first = false;
        if (monomial.empty()) {
            out += s.magnitude;
        } else if (s.magnitude == "1") {
            out += monomial;
        } else {
            out += s.magnitude + "*" + monomial;
        }
    }
    return out;
}

}  // namespace

HomogPoly parse_poly(std::string_view src, Field field, unsigned nvars) {
    Parser parser(src, field, nvars);
    const Expr e = parser.parse_all();
    std::vector<Term> terms;
    std::optional<unsigned> degree;
    for (const auto& [exps, c] : e) {
        unsigned d = 0;
        for (unsigned x : exps) d += x;
        if (degree && *degree != d) fail("not homogeneous: terms of degree " + std::to_string(*degree) + " and " + std::to_string(d));
        degree = d;
        terms.push_back(Term{exps, c});
    }
    // The zero polynomial has no terms to fix a degree; declare it of degree 0.
    return HomogPoly::from_terms(field, nvars, degree.value_or(0), std::move(terms));
}

Elem parse_elem(std::string_view src, Field field) {
    Parser parser(src, field, 0);
    const Expr e = parser.parse_all();
    if (e.empty()) return Elem(field);
    return e.begin()->second;
}

std::string to_string(const HomogPoly& f) { return render(f.terms(), "x"); }

std::string to_string(const AffinePoly& g) { return render(g.terms(), "u"); }

}  // namespace kzero
