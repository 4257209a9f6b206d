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

#include "doctest.h"
#include "kzero/error.hpp"
#include "kzero/text.hpp"

using namespace kzero;

TEST_CASE("parse examples") {
    const Field f5 = Field::prime(5), f9 = Field::extension(3, 2);
    auto q = parse_poly("x0*x1 - x2^2", f5, 3);
    CHECK(q.degree() == 2);
    CHECK(q.terms().size() == 2);
    CHECK_THROWS_WITH_AS(parse_poly("x0 + x1^2", f5, 3), doctest::Contains("not homogeneous"), Error);
    auto l = parse_poly("(1+2*t)*x0 + t*x1", f9, 2);
    CHECK(l.degree() == 1);
    CHECK(l.linear_coefficients()[0] == Elem::from_int(f9, 1) + Elem::from_int(f9, 2) * Elem::generator(f9));
    CHECK(to_string(l) == "(1+2*t)*x0 + t*x1");
}

TEST_CASE("parse errors") {
    const Field f5 = Field::prime(5);
    CHECK_THROWS_WITH_AS(parse_poly("x0 + x3", f5, 3), doctest::Contains("unknown variable"), Error);
    CHECK_THROWS_WITH_AS(parse_poly("x0 + * x1", f5, 3), doctest::Contains("position"), Error);
    CHECK_THROWS_AS(parse_poly("1/2*x0", f5, 3), Error);
    CHECK_THROWS_AS(parse_poly("t*x0", f5, 3), Error);
}

TEST_CASE("rational coefficients and products") {
    const Field q = Field::rationals();
    auto f = parse_poly("1/2*x0^2 - 3*x1*x2 + (x0 + x1)*(x0 - x1)", q, 3);
    CHECK(to_string(f) == "3/2*x0^2 - x1^2 - 3*x1*x2");
    CHECK(parse_poly(to_string(f), q, 3) == f);
    CHECK(to_string(parse_poly("0", q, 2)) == "0");
}
