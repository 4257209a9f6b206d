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

// Galois descent of hyperplane arrangements along F_{p^m} / F_p: Frobenius
// stability of a span, Hilbert 90 for the resulting cocycle, and the class of a
// union of hyperplanes that is defined over the base field.

#include <cstdint>
#include <vector>

#include "kzero/strat.hpp"

namespace kzero {

struct GaloisContext {
    Field base;  ///< F_p
    Field ext;   ///< F_{p^m}
    unsigned m;  ///< order of Gal(ext/base), generated by a -> a^p

    static GaloisContext make(std::uint32_t p, unsigned m);
    [[nodiscard]] Elem frobenius(const Elem& a, unsigned power = 1) const;
    [[nodiscard]] Matrix frobenius(const Matrix& a, unsigned power = 1) const;
};

/// alpha_{sigma^0}, ..., alpha_{sigma^{m-1}}.
struct Cocycle {
    std::vector<Matrix> images;
};

bool is_cocycle(const GaloisContext& ctx, const Cocycle& c);

struct Stability {
    bool stable = false;
    std::vector<std::size_t> basis_indices;  ///< maximal independent subset of the input, in order
    Matrix basis;                            ///< r x (n+1) coefficient rows of that subset
    Cocycle cocycle;                         ///< empty unless stable
};

/// Whether Frobenius maps span(forms) into itself; if so, the cocycle of its action on the basis.
Stability frobenius_stability_check(const GaloisContext& ctx, const std::vector<HomogPoly>& forms);

inline constexpr std::uint64_t default_descent_seed = 20240607;

struct Trivialization {
    Matrix b;
    unsigned attempts;  ///< averaging rounds used, counting the identity start
};

/// B with alpha_sigma * sigma(B) = B, from B = sum_i alpha_{sigma^i} sigma^i(C).
Trivialization h90_trivialize(const GaloisContext& ctx, const Cocycle& c, std::uint64_t seed = default_descent_seed,
                              unsigned max_attempts = 64);

struct Descent {
    std::vector<HomogPoly> basis;  ///< over ctx.base, in reduced echelon form
    Stability stability;
    Trivialization h90;
};

/// Rational basis of span(forms) over ctx.ext.  Cross-checked against fixed_point_basis.
Descent descend_subspace(const GaloisContext& ctx, const std::vector<HomogPoly>& forms,
                         std::uint64_t seed = default_descent_seed);

/// Independent oracle: a basis of span(forms) intersected with F_p^{n+1}.
std::vector<Vector> fixed_point_basis(const GaloisContext& ctx, const std::vector<HomogPoly>& forms);

/// X = V(h_1 ... h_d) with forms over ctx.ext whose product is defined over ctx.base.
StratResult class_of_descended_arrangement(const GaloisContext& ctx, const std::vector<HomogPoly>& forms,
                                           std::uint64_t seed = default_descent_seed,
                                           const SearchOptions& options = {});

}  // namespace kzero
