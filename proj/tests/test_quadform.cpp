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
#include "kzero/quadform.hpp"
#include "kzero/text.hpp"

using namespace kzero;

namespace {

bool is_diagonal(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) return false;
    return true;
}

QuadForm random_form(Field f, unsigned nvars, std::mt19937_64& rng) {
    Matrix g(f, nvars, nvars);
    for (unsigned i = 0; i < nvars; ++i) {
        for (unsigned j = i; j < nvars; ++j) {
            const Elem e = f.is_finite() ? Elem::from_index(f, rng() % f.order())
                                         : Elem::from_int(f, static_cast<long long>(rng() % 7) - 3);
            g(i, j) = e;
            g(j, i) = e;
        }
    }
    return QuadForm(f, g);
}

}  // namespace

TEST_CASE("gram from polynomial") {
    const Field f5 = Field::prime(5);
    auto q = QuadForm::from_poly(parse_poly("x0*x1", f5, 2));
    CHECK(q.gram()(0, 1).index() == 3);
    CHECK(q.gram()(1, 0).index() == 3);
    CHECK(q.gram()(0, 0).is_zero());
    auto sq = QuadForm::from_poly(parse_poly("x0^2", f5, 3));
    CHECK(sq.gram()(0, 0).is_one());
    CHECK(sq.rank() == 1);
    CHECK_THROWS_WITH_AS(QuadForm::from_poly(parse_poly("x0^3", f5, 2)), doctest::Contains("wrong degree"), Error);
    CHECK(q.to_poly() == parse_poly("x0*x1", f5, 2));
}

TEST_CASE("diagonalize examples") {
    const Field f5 = Field::prime(5);
    auto d = diagonalize(QuadForm::from_poly(parse_poly("x0^2 + 2*x1^2", f5, 2)));
    CHECK(d.transform == Matrix::identity(f5, 2));
    CHECK(d.diagonal[0].index() == 1);
    CHECK(d.diagonal[1].index() == 2);
    auto h = QuadForm::from_poly(parse_poly("x0*x1", f5, 2));
    auto dh = diagonalize(h);
    CHECK(dh.rank == 2);
    CHECK(is_diagonal(h.substitute(dh.transform).gram()));
    auto r1 = diagonalize(QuadForm::from_poly(parse_poly("x0^2", f5, 3)));
    CHECK(r1.rank == 1);
    CHECK(r1.diagonal[0].is_one());
    CHECK(r1.diagonal[1].is_zero());
    CHECK(r1.diagonal[2].is_zero());
}

TEST_CASE("find_projective_point examples") {
    const Field f3 = Field::prime(3);
    auto p = find_projective_point(QuadForm::from_poly(parse_poly("x0*x1 - x2*x3", f3, 4)));
    REQUIRE(p);
    CHECK((*p)[0].is_one());
    CHECK_FALSE(find_projective_point(QuadForm::from_poly(parse_poly("x0^2 + x1^2", f3, 2))));
    auto c = find_projective_point(QuadForm::from_poly(parse_poly("x0^2 + x1^2 + x2^2", f3, 3)));
    REQUIRE(c);
    for (const auto& e : *c) CHECK(e.is_one());
    auto rq = find_projective_point(QuadForm::from_poly(parse_poly("x0^2 + x1^2 - 2*x2^2", Field::rationals(), 3)));
    REQUIRE(rq);
    CHECK(QuadForm::from_poly(parse_poly("x0^2 + x1^2 - 2*x2^2", Field::rationals(), 3)).value(*rq).is_zero());
}

TEST_CASE("hyperbolic_normalize examples") {
    const Field f5 = Field::prime(5);
    auto h = QuadForm::from_poly(parse_poly("x0*x1", f5, 2));
    Vector x{Elem(f5), Elem::from_int(f5, 1)};
    auto hn = hyperbolic_normalize(h, x);
    CHECK(hn.residual.nvars() == 0);
    CHECK(linear_substitute(h.to_poly(), hn.transform) == parse_poly("x0*x1", f5, 2));
    auto q = QuadForm::from_poly(parse_poly("x0*x1 - x2*x3", f5, 4));
    Vector p{Elem::from_int(f5, 1), Elem(f5), Elem(f5), Elem(f5)};
    auto n = hyperbolic_normalize(q, p);
    CHECK(n.residual.nvars() == 2);
    CHECK(n.residual.rank() == 2);
    Vector bad{Elem::from_int(f5, 1), Elem::from_int(f5, 1), Elem(f5), Elem(f5)};
    CHECK_THROWS_AS(hyperbolic_normalize(q, bad), Error);
    CHECK_THROWS_AS(hyperbolic_normalize(QuadForm::from_poly(parse_poly("x0^2", f5, 2)), x), Error);
}

TEST_CASE("random quadratic forms") {
    std::mt19937_64 rng(17);
    for (Field f : {Field::prime(3), Field::prime(5), Field::prime(7), Field::rationals()}) {
        for (int trial = 0; trial < 70; ++trial) {
            const unsigned n = 1 + rng() % 5;
            auto q = random_form(f, n, rng);
            auto d = diagonalize(q);
            auto g = q.substitute(d.transform).gram();
            CHECK(is_diagonal(g));
            CHECK(d.rank == q.rank());
            CHECK(rank(d.transform) == n);
            for (unsigned i = 0; i < n; ++i) CHECK(g(i, i) == d.diagonal[i]);
            if (!f.is_finite()) continue;
            auto pt = find_projective_point(q);
            const auto cnt = count_points(CountQuery{f, n - 1, {q.to_poly()}, {}});
            if (q.rank() == 0) continue;
            CHECK(pt.has_value() == (cnt > 0));
            if (q.rank() >= 3) CHECK(pt.has_value());
            if (pt && q.is_nondegenerate()) {
                auto hn = hyperbolic_normalize(q, *pt);
                auto out = linear_substitute(q.to_poly(), hn.transform);
                Exponents e(n, 0);
                e[0] = 1;
                e[1] = 1;
                CHECK(out.coefficient(e).is_one());
                for (const auto& t : out.terms()) {
                    if (t.exponents == e) continue;
                    CHECK(t.exponents[0] == 0);
                    CHECK(t.exponents[1] == 0);
                }
                CHECK(hn.residual.is_nondegenerate());
                auto back = invert(hn.transform) * *pt;
                CHECK(back[0].is_zero());
                for (unsigned i = 2; i < n; ++i) CHECK(back[i].is_zero());
            }
        }
    }
}
