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

// Exact arithmetic over Q, prime fields F_p (p odd) and extensions F_{p^m}.
//
// Fields are interned: a Field is a cheap handle and two handles compare equal
// iff they describe the same field.  Finite field elements are stored as an
// index in [0, q): for F_p the residue itself, for F_{p^m} the base-p digits
// of the residue polynomial (digit i is the coefficient of t^i).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace kzero {

enum class FieldKind { rationals, prime, extension };

namespace detail {
struct FieldData;
}

class Field {
  public:
    static Field rationals();
    /// F_p; p must be an odd prime.
    static Field prime(std::uint32_t p);
    /// F_{p^m} with the lexicographically smallest monic irreducible modulus.
    /// m = 1 returns the prime field.
    static Field extension(std::uint32_t p, unsigned m);
    /// F_p[t]/(modulus); `modulus` is monic, coefficients listed from t^0 upward.
    static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    [[nodiscard]] FieldKind kind() const;
    [[nodiscard]] bool is_finite() const { return kind() != FieldKind::rationals; }
    /// 0 for Q.
    [[nodiscard]] std::uint32_t characteristic() const;
    /// Degree over the prime field (1 for F_p and Q).
    [[nodiscard]] unsigned degree() const;
    /// Number of elements; throws for Q.
    [[nodiscard]] std::uint64_t order() const;
    /// Monic modulus from t^0 upward; empty unless kind() == extension.
    [[nodiscard]] std::span<const std::uint32_t> modulus() const;
    [[nodiscard]] Field prime_subfield() const;
    /// "Q", "F5" or "F9[t]/(t^2+1)".
    [[nodiscard]] std::string to_string() const;

    // Raw arithmetic on element indices of a finite field.
    [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    [[nodiscard]] std::uint64_t neg(std::uint64_t a) const;
    [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    [[nodiscard]] std::uint64_t inv(std::uint64_t a) const;

    friend bool operator==(Field a, Field b) { return a.data_ == b.data_; }

  private:
    explicit Field(const detail::FieldData* data) : data_(data) {}
    const detail::FieldData* data_;
    friend class Elem;
};

class Elem {
  public:
    /// Zero of `field`.
    explicit Elem(Field field);

    static Elem from_int(Field field, long long value);
    static Elem from_rational(Field field, const mpq_class& value);
    /// Finite fields only: the element with canonical index `index`.
    static Elem from_index(Field field, std::uint64_t index);
    /// Extension fields: sum of coeffs[i] * t^i, reduced.
    static Elem from_coeffs(Field field, std::span<const long long> coeffs);
    /// The generator t of an extension field.
    static Elem generator(Field field);

    [[nodiscard]] Field field() const { return field_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] std::uint64_t index() const;
    [[nodiscard]] const mpq_class& rational() const;
    /// Digits in the monomial basis {1, t, ..., t^{m-1}}; finite fields only.
    [[nodiscard]] std::vector<std::uint32_t> coeffs() const;
    [[nodiscard]] bool in_prime_subfield() const;
    /// Same value viewed in `target`; the value must lie in the common prime subfield
    /// (or both are Q).
    [[nodiscard]] Elem cast(Field target) const;

    [[nodiscard]] Elem inverse() const;
    [[nodiscard]] Elem pow(std::uint64_t e) const;
    /// a -> a^p on a finite field.
    [[nodiscard]] Elem frobenius() const;

    /// Canonical text: "3", "-1/2", "1+2*t".
    [[nodiscard]] std::string to_string() const;

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend Elem operator/(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a);
    Elem& operator+=(const Elem& b) { return *this = *this + b; }
    Elem& operator-=(const Elem& b) { return *this = *this - b; }
    Elem& operator*=(const Elem& b) { return *this = *this * b; }
    friend bool operator==(const Elem& a, const Elem& b);

  private:
    Elem(Field field, std::uint64_t index) : field_(field), value_(index) {}
    Elem(Field field, mpq_class value) : field_(field), value_(std::move(value)) {}

    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

using Vector = std::vector<Elem>;

/// Square root in a finite field: a root r with r^2 = a (smallest index), or nullopt.
/// Throws for a = 0 and for Q.
std::optional<Elem> is_square(const Elem& a);

/// Exact square root of a rational number, if it is a square in Q.
std::optional<Elem> rational_sqrt(const Elem& a);

bool is_prime(std::uint64_t n);

}  // namespace kzero
