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
#include <set>

#include "doctest.h"
#include "kzero/error.hpp"
#include "kzero/field.hpp"

using namespace kzero;

TEST_CASE("prime field arithmetic") {
    const Field f5 = Field::prime(5);
    CHECK((Elem::from_int(f5, 3) * Elem::from_int(f5, 4)).index() == 2);
    const Field f7 = Field::prime(7);
    CHECK((Elem::from_int(f7, 1) / Elem::from_int(f7, 2)).index() == 4);
    CHECK(Elem::from_int(f7, -1).index() == 6);
    CHECK_THROWS_AS((void)(Elem::from_int(f7, 1) / Elem(f7)), Error);
    CHECK_THROWS_AS((void)(Elem::from_int(f7, 1) + Elem::from_int(f5, 1)), Error);
}

TEST_CASE("rejects even and composite characteristic") {
    CHECK_THROWS_AS(Field::prime(2), Error);
    CHECK_THROWS_AS(Field::prime(9), Error);
    CHECK_THROWS_AS(Field::extension(4, 2), Error);
}

TEST_CASE("F9 with t^2 + 1") {
    const Field f9 = Field::extension(3, 2);
    REQUIRE(f9.modulus().size() == 3);
    CHECK(f9.modulus()[0] == 1);
    CHECK(f9.modulus()[1] == 0);
    CHECK(f9.modulus()[2] == 1);
    CHECK(f9.to_string() == "F9[t]/(t^2+1)");
    const Elem t = Elem::generator(f9);
    CHECK(t * t == Elem::from_int(f9, 2));
    CHECK(t.frobenius() == Elem::from_int(f9, 2) * t);
    const Elem one_t = Elem::from_int(f9, 1) + t;
    CHECK(one_t.frobenius() == Elem::from_int(f9, 1) + Elem::from_int(f9, 2) * t);
    CHECK(one_t.frobenius() == one_t * one_t * one_t);
    CHECK(one_t.to_string() == "1+t");
    CHECK(Elem::from_int(Field::prime(5), 4).frobenius().index() == 4);
}

TEST_CASE("extension of degree 1 is the prime field") {
    CHECK(Field::extension(5, 1) == Field::prime(5));
    CHECK(Field::extension(5, 1).modulus().empty());
}

TEST_CASE("cubic modulus over F3 is irreducible") {
    const Field f27 = Field::extension(3, 3);
    auto mod = f27.modulus();
    REQUIRE(mod.size() == 4);
    for (unsigned a = 0; a < 3; ++a) {
        unsigned v = 0, pw = 1;
        for (unsigned c : mod) {
            v = (v + c * pw) % 3;
            pw = pw * a % 3;
        }
        CHECK(v != 0);
    }
}

TEST_CASE("squares") {
    const Field f7 = Field::prime(7);
    auto r = is_square(Elem::from_int(f7, 2));
    REQUIRE(r);
    CHECK(r->index() == 3);
    CHECK_FALSE(is_square(Elem::from_int(Field::prime(3), 2)));
    auto r5 = is_square(Elem::from_int(Field::prime(5), 4));
    REQUIRE(r5);
    CHECK(r5->index() == 2);
    CHECK_THROWS_AS(is_square(Elem(f7)), Error);
    CHECK_THROWS_AS(is_square(Elem::from_int(Field::rationals(), 4)), Error);
    auto q = rational_sqrt(Elem::from_rational(Field::rationals(), mpq_class(9, 4)));
    REQUIRE(q);
    CHECK(q->rational() == mpq_class(3, 2));
    CHECK_FALSE(rational_sqrt(Elem::from_int(Field::rationals(), 2)));
}

TEST_CASE("exhaustive field axioms for small q") {
    for (auto [p, m] : {std::pair{3U, 1U}, {5U, 1U}, {7U, 1U}, {3U, 2U}, {5U, 2U}, {7U, 2U}, {3U, 3U}}) {
        const Field f = Field::extension(p, m);
        const auto q = f.order();
        CAPTURE(f.to_string());
        std::size_t squares = 0;
        for (std::uint64_t i = 1; i < q; ++i) {
            const Elem a = Elem::from_index(f, i);
            CHECK((a * a.inverse()).is_one());
            CHECK(a.pow(q - 1).is_one());
            Elem b = a;
            for (unsigned k = 0; k < m; ++k) b = b.frobenius();
            CHECK(b == a);
            if (auto r = is_square(a)) {
                CHECK(*r * *r == a);
                ++squares;
            }
        }
        CHECK(squares == (q - 1) / 2);
    }
}

TEST_CASE("frobenius is multiplicative") {
    const Field f = Field::extension(5, 3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Elem a = Elem::from_index(f, rng() % f.order());
        const Elem b = Elem::from_index(f, rng() % f.order());
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    }
}

TEST_CASE("rationals stay reduced") {
    const Field q = Field::rationals();
    const Elem a = Elem::from_rational(q, mpq_class(2, 4));
    CHECK(a.rational() == mpq_class(1, 2));
    CHECK((a + a).is_one());
    CHECK(Elem::from_rational(q, mpq_class(-3, 6)).to_string() == "-1/2");
    CHECK_THROWS_AS((void)q.order(), Error);
}
