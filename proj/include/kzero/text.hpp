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

// Text form of polynomials: terms `[coeff*]x<i>[^e]` joined by + and -.  Coefficients are
// integers, fractions a/b (over Q), or literals in the generator t of an extension field,
// e.g. `(1+2*t)*x0 + t*x1`.  Whitespace is ignored.

#include <string>
#include <string_view>

#include "kzero/poly.hpp"

namespace kzero {

/// Throws Error(precondition) with the offending position on syntax errors, inhomogeneous
/// input, or a variable index >= nvars.
HomogPoly parse_poly(std::string_view src, Field field, unsigned nvars);

/// A single coefficient literal such as "3", "-1/2" or "1+2*t".
Elem parse_elem(std::string_view src, Field field);

/// Canonical text; parse_poly(to_string(f)) == f.
std::string to_string(const HomogPoly& f);
/// Affine polynomials print their variables as u0, u1, ...
std::string to_string(const AffinePoly& g);

}  // namespace kzero
