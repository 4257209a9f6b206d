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

#include <random>

#include "doctest.h"
#include "kzero/error.hpp"
#include "kzero/poly.hpp"
#include "kzero/text.hpp"

using namespace kzero;

namespace {

Vector vec(Field f, std::initializer_list<long long> xs) {
    Vector v;
    for (long long x : xs) v.push_back(Elem::from_int(f, x));
    return v;
}

HomogPoly random_form(Field f, unsigned nvars, unsigned degree, std::mt19937_64& rng) {
    std::vector<Term> terms;
    for (int k = 0; k < 5; ++k) {
        Exponents e(nvars, 0);
        for (unsigned d = 0; d < degree; ++d) ++e[rng() % nvars];
        terms.push_back({e, Elem::from_int(f, static_cast<long long>(rng() % 9) - 4)});
    }
    return HomogPoly::from_terms(f, nvars, degree, terms);
}

Matrix random_matrix(Field f, std::size_t n, std::mt19937_64& rng) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Elem::from_int(f, static_cast<long long>(rng() % 5) - 2);
    return m;
}

}  // namespace

TEST_CASE("evaluate") {
    const Field f3 = Field::prime(3), f5 = Field::prime(5), f9 = Field::extension(3, 2);
    CHECK(parse_poly("x0*x1 - x2^2", f3, 3).evaluate(vec(f3, {1, 1, 1})).is_zero());
    CHECK(parse_poly("x0^3", f5, 4).evaluate(vec(f5, {2, 0, 0, 0})).index() == 3);
    const Vector pt{Elem::from_int(f9, 1), Elem::generator(f9)};
    CHECK(parse_poly("x0^2 + x1^2", f9, 2).evaluate(pt).is_zero());
    CHECK_THROWS_AS((void)parse_poly("x0", f3, 2).evaluate(vec(f3, {1})), Error);
}

TEST_CASE("linear_substitute") {
    const Field f5 = Field::prime(5);
    auto f = parse_poly("x0*x1", f5, 2);
    CHECK(linear_substitute(f, Matrix::identity(f5, 2)) == f);
    auto swap = Matrix::from_rows(f5, {vec(f5, {0, 1}), vec(f5, {1, 0})}, 2);
    CHECK(linear_substitute(parse_poly("x0^2", f5, 2), swap) == parse_poly("x1^2", f5, 2));
    auto d = Matrix::from_rows(f5, {vec(f5, {2, 0, 0}), vec(f5, {0, 3, 0}), vec(f5, {0, 0, 1})}, 3);
    auto g = parse_poly("x0*x1 - x2^2", f5, 3);
    CHECK(linear_substitute(g, d) == g);
}

TEST_CASE("partial derivatives") {
    const Field f3 = Field::prime(3), q = Field::rationals();
    CHECK(partial_derivative(parse_poly("x0^2*x1", q, 2), 0) == parse_poly("2*x0*x1", q, 2));
    CHECK(partial_derivative(parse_poly("x1^3", q, 2), 0).is_zero());
    CHECK(partial_derivative(parse_poly("x0*x1 - x2^2", f3, 3), 2) == parse_poly("x2", f3, 3));
    CHECK_THROWS_AS(partial_derivative(parse_poly("x1^3", q, 2), 2), Error);
}

TEST_CASE("split_by_variable") {
    const Field q = Field::rationals();
    auto parts = split_by_variable(parse_poly("x3^2*x0 + x3*x1*x2 + x0*x1*x2", q, 4), 3);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == parse_poly("x0*x1*x2", q, 4));
    CHECK(parts[1] == parse_poly("x1*x2", q, 4));
    CHECK(parts[2] == parse_poly("x0", q, 4));
    CHECK(parts[3].is_zero());
    CHECK(parts[3].degree() == 0);
    auto p2 = split_by_variable(parse_poly("x0*x1", q, 2), 1);
    REQUIRE(p2.size() == 3);
    CHECK(p2[0].is_zero());
    CHECK(p2[1] == parse_poly("x0", q, 2));
}

TEST_CASE("charts") {
    const Field q = Field::rationals();
    auto g = dehomogenize(parse_poly("x0*x1 - x2^2", q, 3), 0);
    CHECK(to_string(g) == "-u1^2 + u0");
    auto one = dehomogenize(parse_poly("x0^2", q, 3), 0);
    CHECK(one.total_degree() == 0);
    CHECK(one.terms().size() == 1);
    CHECK(homogenize(g, 0) == parse_poly("x0*x1 - x2^2", q, 3));
    CHECK_THROWS_AS(homogenize(AffinePoly(q, 2), 0), Error);
}

TEST_CASE("multiply") {
    const Field f5 = Field::prime(5), f9 = Field::extension(3, 2);
    CHECK(parse_poly("x0", f5, 2) * parse_poly("x1", f5, 2) == parse_poly("x0*x1", f5, 2));
    CHECK(parse_poly("x0+x1", f5, 2) * parse_poly("x0-x1", f5, 2) == parse_poly("x0^2 - x1^2", f5, 2));
    auto prod = parse_poly("x0 + t*x1", f9, 2) * parse_poly("x0 - t*x1", f9, 2);
    CHECK(prod == parse_poly("x0^2 + x1^2", f9, 2));
    for (const auto& term : prod.terms()) CHECK(term.coefficient.in_prime_subfield());
}

TEST_CASE("polynomial identities on random input") {
    std::mt19937_64 rng(3);
    for (Field f : {Field::prime(5), Field::prime(7), Field::rationals()}) {
        for (int trial = 0; trial < 60; ++trial) {
            const unsigned n = 2 + rng() % 3, d = 1 + rng() % 3;
            auto f0 = random_form(f, n, d, rng);
            auto m = random_matrix(f, n, rng), k = random_matrix(f, n, rng);
            CHECK(linear_substitute(f0, m * k) == linear_substitute(linear_substitute(f0, m), k));
            Vector v;
            for (unsigned i = 0; i < n; ++i) v.push_back(Elem::from_int(f, static_cast<long long>(rng() % 7)));
            CHECK(linear_substitute(f0, m).evaluate(v) == f0.evaluate(m * v));
            HomogPoly euler(f, n, d);
            for (unsigned i = 0; i < n; ++i) euler = euler + HomogPoly::variable(f, n, i) * partial_derivative(f0, i);
            CHECK(euler == f0.scaled(Elem::from_int(f, d)));
            const unsigned i = rng() % n;
            auto parts = split_by_variable(f0, i);
            HomogPoly back(f, n, d);
            HomogPoly xi = HomogPoly::constant(f, n, Elem::from_int(f, 1));
            for (const auto& part : parts) {
                back = back + xi * part;
                xi = xi * HomogPoly::variable(f, n, i);
            }
            CHECK(back == f0);
            if (!f0.is_zero()) CHECK(parse_poly(to_string(f0), f, n) == f0);
        }
    }
}
