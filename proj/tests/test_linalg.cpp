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
#include "kzero/linalg.hpp"

using namespace kzero;

namespace {

Vector vec(Field f, std::initializer_list<long long> xs) {
    Vector v;
    for (long long x : xs) v.push_back(Elem::from_int(f, x));
    return v;
}

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Elem::from_int(f, static_cast<long long>(rng() % 7) - 3);
    }
    return m;
}

}  // namespace

TEST_CASE("rref and rank") {
    const Field f5 = Field::prime(5);
    CHECK(rank(Matrix::identity(f5, 3)) == 3);
    CHECK(rank(Matrix::from_rows(f5, {vec(f5, {1, 1, 0}), vec(f5, {2, 2, 0})}, 3)) == 1);
    auto r = rref(Matrix::from_rows(f5, {vec(f5, {1, 0, 0}), vec(f5, {0, 1, 0}), vec(f5, {1, 1, 0})}, 3));
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("nullspace examples") {
    const Field f3 = Field::prime(3);
    auto ns = nullspace(Matrix::from_rows(f3, {vec(f3, {1, 0, 0}), vec(f3, {0, 1, 0})}, 3));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == vec(f3, {0, 0, 1}));
    CHECK(nullspace(Matrix(f3, 1, 3)).size() == 3);
    auto ns2 = nullspace(Matrix::from_rows(f3, {vec(f3, {1, 1})}, 2));
    REQUIRE(ns2.size() == 1);
    CHECK(ns2[0] == vec(f3, {1, 2}));
}

TEST_CASE("invert") {
    const Field f5 = Field::prime(5);
    CHECK(invert(Matrix::identity(f5, 3)) == Matrix::identity(f5, 3));
    auto d = Matrix::from_rows(f5, {vec(f5, {2, 0}), vec(f5, {0, 3})}, 2);
    CHECK(invert(d) == Matrix::from_rows(f5, {vec(f5, {3, 0}), vec(f5, {0, 2})}, 2));
    CHECK_THROWS_WITH_AS(invert(Matrix(f5, 2, 2)), doctest::Contains("singular"), Error);
}

TEST_CASE("extend_to_basis") {
    const Field f3 = Field::prime(3);
    std::vector<Vector> one{vec(f3, {0, 1, 0})};
    auto m = extend_to_basis(f3, one, 3);
    CHECK(m.column(0) == vec(f3, {0, 1, 0}));
    CHECK(m.column(1) == vec(f3, {1, 0, 0}));
    CHECK(m.column(2) == vec(f3, {0, 0, 1}));
    std::vector<Vector> diag{vec(f3, {1, 1})};
    auto m2 = extend_to_basis(f3, diag, 2);
    CHECK(m2.column(1) == vec(f3, {1, 0}));
    std::vector<Vector> full{vec(f3, {1, 2}), vec(f3, {0, 1})};
    CHECK(extend_to_basis(f3, full, 2) == Matrix::from_columns(f3, full, 2));
    std::vector<Vector> dep{vec(f3, {1, 1}), vec(f3, {2, 2})};
    CHECK_THROWS_AS(extend_to_basis(f3, dep, 2), Error);
}

TEST_CASE("random linear algebra properties") {
    std::mt19937_64 rng(11);
    for (Field f : {Field::prime(3), Field::prime(5), Field::prime(7), Field::rationals(), Field::extension(3, 2)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
            Matrix m = random_matrix(f, r, c, rng);
            CHECK(rank(m) == rank(m.transpose()));
            auto ns = nullspace(m);
            CHECK(ns.size() == c - rank(m));
            for (const auto& v : ns) {
                for (const auto& e : m * v) CHECK(e.is_zero());
            }
            Matrix sq = random_matrix(f, r, r, rng);
            if (rank(sq) == r) {
                CHECK(sq * invert(sq) == Matrix::identity(f, r));
                CHECK_FALSE(determinant(sq).is_zero());
            } else {
                CHECK(determinant(sq).is_zero());
            }
        }
    }
}
