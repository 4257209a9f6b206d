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
#include "kzero/kclass.hpp"
#include "kzero/text.hpp"

using namespace kzero;

TEST_CASE("ring operations") {
    auto a = ClassExpr::constant(1) + ClassExpr::lefschetz(1, 2);
    CHECK((a + ClassExpr::constant(1)).to_string() == "2 + 2L");
    CHECK((projective_space_class(1) - projective_space_class(1)).is_zero());
    const Field f3 = Field::prime(3);
    auto z = Atom::variety("Z", 1, {parse_poly("x0", f3, 2)});
    auto e = ClassExpr::constant(1) + ClassExpr::of_atom(z);
    auto shifted = e.lshift(2);
    CHECK(shifted.coefficient(2) == 1);
    CHECK(shifted.residuals().size() == 1);
    CHECK(shifted.residuals()[0].shift == 2);
    CHECK(shifted.to_string() == "L^2 + L^2*[Z]");
    CHECK((e - ClassExpr::of_atom(z)).is_polynomial());
}

TEST_CASE("projective space classes") {
    CHECK(projective_space_class(0).to_string() == "1");
    CHECK(projective_space_class(2).to_string() == "1 + L + L^2");
    CHECK(projective_space_class(1).to_string() == "1 + L");
    CHECK_THROWS_AS(projective_space_class(-1), Error);
    for (std::uint64_t q : {3, 5, 7}) {
        for (int n = 0; n <= 4; ++n) {
            CountQuery all{Field::prime(static_cast<std::uint32_t>(q)), static_cast<unsigned>(n), {}, {}};
            CHECK(count_measure(projective_space_class(n), q) == static_cast<long long>(count_points(all)));
        }
    }
}

TEST_CASE("residue mod L") {
    CHECK(residue_mod_L(ClassExpr::constant(1) + ClassExpr::lefschetz(1, 2)) == 1);
    const Field f5 = Field::prime(5);
    auto v = Atom::variety("V(f2,f3)", 2, {parse_poly("x0*x1", f5, 3), parse_poly("x2^3", f5, 3)});
    CHECK(residue_mod_L(ClassExpr::constant(1) + ClassExpr::of_atom(v, 1)) == 1);
    CHECK(residue_mod_L(ClassExpr::of_atom(Atom::etale({2}))) == 0);
    CHECK_FALSE(residue_mod_L(ClassExpr::of_atom(v)).has_value());
}

TEST_CASE("count measure") {
    CHECK(count_measure(ClassExpr::constant(1) + ClassExpr::lefschetz(1, 2), 3) == 7);
    CHECK(count_measure(ClassExpr::constant(1) + ClassExpr::of_atom(Atom::etale({2}), 1), 5) == 1);
    CHECK(count_measure(projective_space_class(3), 3) == 40);
    auto rq = Atom::variety("C", 2, {parse_poly("x0^2 + x1^2 - 3*x2^2", Field::rationals(), 3)});
    CHECK_THROWS_WITH_AS(count_measure(ClassExpr::of_atom(rq), 3), doctest::Contains("uncountable atom"), Error);
}

TEST_CASE("count measure is additive") {
    std::mt19937_64 rng(23);
    const Field f5 = Field::prime(5);
    const std::vector<Atom> atoms{Atom::etale({1, 2}), Atom::variety("A", 2, {parse_poly("x0*x1 - x2^2", f5, 3)}),
                                  Atom::variety("B", 1, {parse_poly("x0^2 - 2*x1^2", f5, 2)})};
    auto random_expr = [&] {
        ClassExpr e;
        for (int i = 0; i < 3; ++i) e = e + ClassExpr::lefschetz(rng() % 4, static_cast<long long>(rng() % 7) - 3);
        for (int i = 0; i < 2; ++i)
            e = e + ClassExpr::of_atom(atoms[rng() % atoms.size()], rng() % 3, static_cast<long long>(rng() % 5) - 2);
        return e;
    };
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_expr(), b = random_expr();
        const unsigned k = rng() % 3;
        CHECK(count_measure(a + b, 5) == count_measure(a, 5) + count_measure(b, 5));
        CHECK(count_measure(a - b, 5) == count_measure(a, 5) - count_measure(b, 5));
        long long qk = 1;
        for (unsigned i = 0; i < k; ++i) qk *= 5;
        CHECK(count_measure(a.lshift(k), 5) == qk * count_measure(a, 5));
        if (auto r = residue_mod_L(a)) {
            CHECK((((count_measure(a, 5) - *r) % 5) + 5) % 5 == 0);
        }
    }
}

TEST_CASE("serialization") {
    auto e = ClassExpr::constant(1) + ClassExpr::lefschetz(1, 2) + ClassExpr::of_atom(Atom::etale({2}), 1);
    CHECK(e.to_json().dump() ==
          R"({"coeffs":{"0":1,"1":2},"residuals":[{"shift":1,"multiplicity":1,"atom":{"kind":"etale","degrees":[2]}}]})");
    CHECK(e.to_string() == "1 + 2L + L*[etale{2}]");
    CHECK((ClassExpr::constant(1) - ClassExpr::lefschetz(2, 3)).to_string() == "1 - 3L^2");
}
