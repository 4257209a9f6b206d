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

// Class computations for the hypersurface families with a constructive
// stratification: quadrics, hyperplane arrangements, cones, cubics with a
// rational singular point, and unions of two quadrics.

#include <optional>
#include <string>
#include <vector>

#include "kzero/kclass.hpp"
#include "kzero/quadform.hpp"

namespace kzero {

struct Hypothesis {
    std::string name;
    bool passed;
};

struct SearchOptions {
    int height = 10;  ///< bound for point searches over Q
    CountOptions count;
};

struct StratResult {
    explicit StratResult(CountQuery input) : input(std::move(input)) {}

    CountQuery input;  ///< the variety whose class was computed
    ClassExpr class_expr;
    Trace trace;
    std::optional<long long> residue;
    std::vector<Hypothesis> hypotheses;
};

StratResult class_of_quadric(const HomogPoly& f, const SearchOptions& options = {});

/// X = V(h_1 ... h_d).  Forms proportional to one another are merged first.
StratResult class_of_arrangement(const std::vector<HomogPoly>& forms, const SearchOptions& options = {});

/// Sum over nonempty subsets S of (-1)^{|S|+1} [P^{n - rank S}].
ClassExpr arrangement_inclusion_exclusion(const std::vector<HomogPoly>& forms);

/// Cone in P^n with apex [0:...:0:1] over Z = V(generators) in P^{n-1}.
StratResult class_of_cone(const std::vector<HomogPoly>& z_generators, const SearchOptions& options = {});

/// First point in search order where f and all its partial derivatives vanish.
std::optional<Vector> find_singular_rational_point(const HomogPoly& f, const SearchOptions& options = {});

/// Cubic hypersurface with a rational singular point; the point is searched for when absent.
StratResult class_of_singular_cubic(const HomogPoly& f, std::optional<Vector> point = std::nullopt,
                                    const SearchOptions& options = {});

/// Coordinates in which q1 = x0*x1 - h(x2..xn) and q2 = x0*L0 + x1*L1 + R.
struct TwoQuadricNormalForm {
    Vector point;      ///< rational point of Q1 and Q2 sent to [0:1:0:...:0]
    Matrix transform;  ///< q_i(M y) gives the forms below
    HomogPoly q1;
    HomogPoly q2;
    HomogPoly h;
    HomogPoly l0;
    HomogPoly l1;
    HomogPoly r;
    /// y1^2 L0 + h L1 + y1 R on P^{n-1} with coordinates (y1, x2, ..., xn).
    HomogPoly gbar;
};

/// Throws for degenerate q1, q1 proportional to q2, a missing common point or L1 = 0.
TwoQuadricNormalForm normalize_two_quadrics(const HomogPoly& q1, const HomogPoly& q2,
                                            const SearchOptions& options = {});

/// X = V(q1 q2) over a finite field, q1 nondegenerate, n >= 4.
StratResult class_of_two_quadric_union(const HomogPoly& q1, const HomogPoly& q2, const SearchOptions& options = {});

// ---------------------------------------------------------------------------

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct StepCheck {
    std::string tag;
    std::string description;
    CheckStatus status;
    std::optional<IdentityValue> value;
};

struct Verification {
    CheckStatus master = CheckStatus::skipped;
    std::optional<long long> measure;  ///< count_measure of the class
    std::optional<long long> oracle;   ///< count_points of the input
    std::vector<StepCheck> steps;

    [[nodiscard]] bool passed() const;
};

/// Counts both sides of every trace identity and compares the class with the input count.
/// Over Q everything is skipped.
Verification verify(const StratResult& result, const CountOptions& options = {});

}  // namespace kzero
