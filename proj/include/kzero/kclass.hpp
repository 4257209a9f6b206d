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

// Elements of the Grothendieck ring of varieties as integer polynomials in the
// Lefschetz class L plus L-shifted residual atoms that have not been expanded.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "kzero/count.hpp"

namespace kzero {

/// Zero-dimensional reduced scheme, recorded by the degrees of its residue fields.
struct EtaleAtom {
    std::vector<unsigned> degrees;  ///< sorted
};

/// A projective variety V(generators) in P^ambient that the engine did not decompose.
struct VarietyAtom {
    Field field;
    unsigned ambient;
    std::vector<HomogPoly> generators;
    std::string label;
    bool resolved = false;
};

class Atom {
  public:
    static Atom etale(std::vector<unsigned> degrees);
    static Atom variety(std::string label, unsigned ambient, std::vector<HomogPoly> generators);

    [[nodiscard]] bool is_etale() const { return std::holds_alternative<EtaleAtom>(data_); }
    [[nodiscard]] const EtaleAtom& as_etale() const { return std::get<EtaleAtom>(data_); }
    [[nodiscard]] const VarietyAtom& as_variety() const { return std::get<VarietyAtom>(data_); }
    [[nodiscard]] std::string label() const;
    /// Identity used for merging and ordering: label plus generators.
    [[nodiscard]] std::string key() const;
    /// Number of F_q-points; etale atoms count their degree-one factors.
    [[nodiscard]] std::uint64_t count(const CountOptions& options = {}) const;
    [[nodiscard]] CountQuery query() const;
    [[nodiscard]] nlohmann::ordered_json to_json() const;

  private:
    explicit Atom(std::variant<EtaleAtom, VarietyAtom> data) : data_(std::move(data)) {}
    std::variant<EtaleAtom, VarietyAtom> data_;
};

struct Residual {
    unsigned shift;
    long long multiplicity;
    Atom atom;
};

class ClassExpr {
  public:
    ClassExpr() = default;
    static ClassExpr constant(long long c);
    /// c * L^k
    static ClassExpr lefschetz(unsigned k, long long c = 1);
    static ClassExpr of_atom(Atom atom, unsigned shift = 0, long long multiplicity = 1);

    [[nodiscard]] const std::map<unsigned, long long>& coeffs() const { return coeffs_; }
    [[nodiscard]] const std::vector<Residual>& residuals() const { return residuals_; }
    [[nodiscard]] long long coefficient(unsigned k) const;
    [[nodiscard]] bool is_zero() const { return coeffs_.empty() && residuals_.empty(); }
    /// No residuals other than etale atoms.
    [[nodiscard]] bool is_fully_resolved() const;
    /// Only the polynomial part remains.
    [[nodiscard]] bool is_polynomial() const { return residuals_.empty(); }
    /// Polynomial part only.
    [[nodiscard]] ClassExpr polynomial_part() const;

    [[nodiscard]] ClassExpr lshift(unsigned k) const;
    [[nodiscard]] ClassExpr scaled(long long c) const;
    friend ClassExpr operator+(const ClassExpr& a, const ClassExpr& b);
    friend ClassExpr operator-(const ClassExpr& a, const ClassExpr& b);
    /// Same polynomial and the same residual atoms with the same shifts and multiplicities.
    friend bool operator==(const ClassExpr& a, const ClassExpr& b);

    /// e.g. "1 + 2L + L^2*[V(x0*x1)]"
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] nlohmann::ordered_json to_json() const;

  private:
    void add_coefficient(unsigned k, long long c);
    void add_residual(unsigned shift, long long multiplicity, const Atom& atom);

    std::map<unsigned, long long> coeffs_;
    std::vector<Residual> residuals_;
};

/// [P^n] = 1 + L + ... + L^n.  Throws for negative n.
ClassExpr projective_space_class(int n);

/// Constant term, or nullopt when a variety atom sits at shift 0.
std::optional<long long> residue_mod_L(const ClassExpr& e);

/// Evaluates L -> q.  Variety atoms must live over a field with q elements.
long long count_measure(const ClassExpr& e, std::uint64_t q, const CountOptions& options = {});

// ---------------------------------------------------------------------------
// Trace: each stratification step records an identity between point counts.

/// coefficient * q^q_power * #locus, or coefficient * q^q_power when locus is empty.
struct CountTerm {
    long long coefficient = 1;
    unsigned q_power = 0;
    std::optional<CountQuery> locus;
};

struct CountIdentity {
    Field field;
    std::vector<CountTerm> lhs;
    std::vector<CountTerm> rhs;
};

struct TraceStep {
    std::string tag;          ///< stable machine name, e.g. "quadric.smooth-fibration"
    std::string description;  ///< one line for humans
    std::optional<CountIdentity> identity;
    /// For steps that are a containment check rather than an identity.
    std::optional<bool> check_passed;
};

struct Trace {
    std::vector<TraceStep> steps;

    void add(TraceStep step) { steps.push_back(std::move(step)); }
    /// Appends `other` with its tags prefixed by `prefix`.
    void append(const Trace& other, const std::string& prefix);
};

struct IdentityValue {
    long long lhs;
    long long rhs;
    [[nodiscard]] bool balanced() const { return lhs == rhs; }
};

/// Evaluates both sides by point counting.
IdentityValue evaluate_identity(const CountIdentity& identity, const CountOptions& options = {});

nlohmann::ordered_json to_json(const CountIdentity& identity);

}  // namespace kzero
