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
#include "kzero/descent.hpp"
#include "kzero/error.hpp"
#include "kzero/text.hpp"

using namespace kzero;

namespace {

std::vector<HomogPoly> forms(Field f, unsigned nvars, std::initializer_list<const char*> src) {
    std::vector<HomogPoly> out;
    for (const char* s : src) out.push_back(parse_poly(s, f, nvars));
    return out;
}

Elem random_nonzero(Field f, std::mt19937_64& rng) { return Elem::from_index(f, 1 + rng() % (f.order() - 1)); }

}  // namespace

TEST_CASE("galois context") {
    const auto ctx = GaloisContext::make(3, 2);
    for (std::uint64_t i = 0; i < ctx.ext.order(); ++i) {
        const Elem a = Elem::from_index(ctx.ext, i);
        CHECK(ctx.frobenius(a, ctx.m) == a);
    }
    CHECK_THROWS_AS(GaloisContext::make(3, 1), Error);
}

TEST_CASE("stability check examples") {
    const auto ctx = GaloisContext::make(3, 2);
    auto swap = frobenius_stability_check(ctx, forms(ctx.ext, 2, {"x0 + t*x1", "x0 - t*x1"}));
    REQUIRE(swap.stable);
    CHECK(is_cocycle(ctx, swap.cocycle));
    const Matrix& a = swap.cocycle.images[1];
    CHECK(a(0, 0).is_zero());
    CHECK(a(0, 1).is_one());
    CHECK(a(1, 0).is_one());
    CHECK(a(1, 1).is_zero());
    CHECK_FALSE(frobenius_stability_check(ctx, forms(ctx.ext, 2, {"x0 + t*x1"})).stable);
    auto rational = frobenius_stability_check(ctx, forms(ctx.ext, 3, {"x0", "x1"}));
    REQUIRE(rational.stable);
    for (const auto& m : rational.cocycle.images) CHECK(m == Matrix::identity(ctx.ext, 2));
}

TEST_CASE("h90 examples") {
    const auto ctx = GaloisContext::make(3, 2);
    const Cocycle trivial{{Matrix::identity(ctx.ext, 2), Matrix::identity(ctx.ext, 2)}};
    CHECK(h90_trivialize(ctx, trivial).b == Matrix::identity(ctx.ext, 2));
    auto swap = frobenius_stability_check(ctx, forms(ctx.ext, 2, {"x0 + t*x1", "x0 - t*x1"}));
    auto t = h90_trivialize(ctx, swap.cocycle, 7);
    CHECK(swap.cocycle.images[1] * ctx.frobenius(t.b) == t.b);
    Cocycle broken = swap.cocycle;
    broken.images[1] = Matrix::identity(ctx.ext, 2);
    broken.images[1](0, 0) = Elem::from_int(ctx.ext, 1) + Elem::generator(ctx.ext);
    CHECK_THROWS_WITH_AS(h90_trivialize(ctx, broken), doctest::Contains("not a cocycle"), Error);
}

TEST_CASE("descend_subspace examples") {
    const auto ctx = GaloisContext::make(3, 2);
    auto d = descend_subspace(ctx, forms(ctx.ext, 3, {"x0 + t*x1", "x0 - t*x1"}));
    REQUIRE(d.basis.size() == 2);
    CHECK(d.basis[0] == parse_poly("x0", ctx.base, 3));
    CHECK(d.basis[1] == parse_poly("x1", ctx.base, 3));
    auto e = descend_subspace(ctx, forms(ctx.ext, 3, {"x0", "x2"}));
    REQUIRE(e.basis.size() == 2);
    CHECK(e.basis[0] == parse_poly("x0", ctx.base, 3));
    CHECK(e.basis[1] == parse_poly("x2", ctx.base, 3));
    CHECK_THROWS_WITH_AS(descend_subspace(ctx, forms(ctx.ext, 3, {"x0 + t*x1"})), doctest::Contains("unstable"), Error);
}

TEST_CASE("descended arrangement examples") {
    const auto ctx = GaloisContext::make(3, 2);
    auto plane = class_of_descended_arrangement(ctx, forms(ctx.ext, 3, {"x0 + t*x1", "x0 - t*x1"}));
    CHECK(plane.class_expr.to_string() == "1 + L*[V(x0^2 + x1^2)]");
    CHECK(count_measure(plane.class_expr, 3) == 1);
    CHECK(count_points(plane.input) == 1);
    CHECK(verify(plane).passed());
    auto space = class_of_descended_arrangement(ctx, forms(ctx.ext, 4, {"x0 + t*x1", "x0 - t*x1"}));
    CHECK(space.class_expr.to_string() == "1 + L + L^2*[V(x0^2 + x1^2)]");
    CHECK(count_measure(space.class_expr, 3) == 4);
    CHECK(count_points(space.input) == 4);
    CHECK(verify(space).passed());
    auto rational = class_of_descended_arrangement(ctx, forms(ctx.ext, 3, {"x0", "x1"}));
    CHECK(rational.class_expr == class_of_arrangement(forms(ctx.base, 3, {"x0", "x1"})).class_expr);
    CHECK_THROWS_AS(class_of_descended_arrangement(ctx, forms(ctx.ext, 3, {"x0 + t*x1"})), Error);
}

TEST_CASE("randomized descent") {
    std::mt19937_64 rng(404);
    for (auto [p, m] : {std::pair{3U, 2U}, {3U, 3U}, {5U, 2U}}) {
        const auto ctx = GaloisContext::make(p, m);
        for (int trial = 0; trial < 8; ++trial) {
            const unsigned n = 2 + rng() % 2;
            const unsigned d = 1 + rng() % n;
            std::vector<HomogPoly> base_forms, scaled, scrambled;
            while (base_forms.size() < d) {
                Vector c;
                for (unsigned i = 0; i <= n; ++i) c.push_back(Elem::from_index(ctx.base, rng() % p));
                auto h = HomogPoly::linear(c);
                if (!h.is_zero()) base_forms.push_back(h);
            }
            for (const auto& h : base_forms) scaled.push_back(h.cast(ctx.ext).scaled(random_nonzero(ctx.ext, rng)));
            Matrix s(ctx.ext, d, d);
            do {
                for (unsigned i = 0; i < d; ++i)
                    for (unsigned j = 0; j < d; ++j) s(i, j) = Elem::from_index(ctx.ext, rng() % ctx.ext.order());
            } while (rank(s) != d);
            for (unsigned i = 0; i < d; ++i) {
                HomogPoly acc(ctx.ext, n + 1, 1);
                for (unsigned j = 0; j < d; ++j) acc = acc + base_forms[j].cast(ctx.ext).scaled(s(i, j));
                scrambled.push_back(acc);
            }
            auto st = frobenius_stability_check(ctx, scrambled);
            REQUIRE(st.stable);
            auto desc = descend_subspace(ctx, scrambled, rng());
            CHECK(st.cocycle.images[1] * ctx.frobenius(desc.h90.b) == desc.h90.b);
            std::vector<Vector> rows;
            for (const auto& h : base_forms) rows.push_back(h.linear_coefficients());
            const auto r = rank(Matrix::from_rows(ctx.base, rows, n + 1));
            CHECK(desc.basis.size() == r);
            for (const auto& b : desc.basis) {
                auto all = rows;
                all.push_back(b.linear_coefficients());
                CHECK(rank(Matrix::from_rows(ctx.base, all, n + 1)) == r);
            }
            auto cls = class_of_descended_arrangement(ctx, scaled);
            CHECK(cls.class_expr == class_of_arrangement(base_forms).class_expr);
            CHECK(verify(cls).passed());

            // A Frobenius orbit of one form: the norm form is rational, the forms are not.
            if (m <= n) {
                Vector c;
                for (unsigned i = 0; i <= n; ++i) c.push_back(Elem::from_index(ctx.ext, rng() % ctx.ext.order()));
                std::vector<HomogPoly> orbit;
                for (unsigned k = 0; k < m; ++k) {
                    Vector ck;
                    for (const auto& e : c) ck.push_back(ctx.frobenius(e, k));
                    orbit.push_back(HomogPoly::linear(ck));
                }
                if (orbit.front().is_zero()) continue;
                auto o = class_of_descended_arrangement(ctx, orbit, rng());
                CHECK(verify(o).passed());
            }
        }
    }
}
