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

#pragma once

// Brute-force point counting on projective varieties over finite fields.
//
// Points of P^n(F_q) are enumerated through canonical representatives: the first
// nonzero coordinate is 1.  The order is fixed: representatives whose leading 1 sits
// at position 0 come first, then position 1, and so on; within a block the remaining
// coordinates run lexicographically by element index, last coordinate fastest.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kzero/poly.hpp"

namespace kzero {

enum class Chart { zero, nonzero };

struct ChartConstraint {
    unsigned variable;
    Chart kind;
    friend bool operator==(const ChartConstraint&, const ChartConstraint&) = default;
};

struct CountQuery {
    Field field;
    unsigned ambient;  ///< n of P^n; generators have n + 1 variables
    std::vector<HomogPoly> generators;
    std::vector<ChartConstraint> constraints;

    /// e.g. "V(x0*x1 - x2^2) in P^2, x0 != 0"
    [[nodiscard]] std::string describe() const;
};

struct CountOptions {
    /// Maximum number of affine tuples q^{n+1} a query may cover.
    std::uint64_t budget = 100'000'000;
    /// Worker threads; 0 picks from the hardware.  The result never depends on this.
    unsigned threads = 0;
};

/// #P^n(F_q)
std::uint64_t projective_space_size(std::uint64_t q, unsigned n);

std::uint64_t count_points(const CountQuery& query, const CountOptions& options = {});

/// Calls `visit` on each point in enumeration order until it returns false.
void for_each_point(const CountQuery& query, const std::function<bool(std::span<const Elem>)>& visit,
                    const CountOptions& options = {});

std::vector<Vector> enumerate_points(const CountQuery& query, const CountOptions& options = {});

/// Visits nonzero integer vectors of height <= `height` (max norm) over Q, one per line
/// through the origin, scaled so the first nonzero coordinate is 1.  Order: by height, then
/// lexicographically.  Stops when `visit` returns false.
void for_each_bounded_height_point(Field rationals, unsigned nvars, int height,
                                   const std::function<bool(std::span<const Elem>)>& visit);

}  // namespace kzero
