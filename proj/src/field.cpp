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

#include "kzero/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "kzero/error.hpp"

namespace kzero {

namespace detail {

using Digits = std::vector<std::uint32_t>;

struct FieldData {
    FieldKind kind = FieldKind::rationals;
    std::uint32_t p = 0;
    unsigned m = 1;
    std::uint64_t q = 0;
    Digits modulus;
    // reduction[k - m] = t^k mod modulus for m <= k <= 2m-2
    std::vector<Digits> reduction;
    // discrete log tables, extension fields with q <= kLogTableLimit
    std::vector<std::uint32_t> exp_table;
    std::vector<std::uint32_t> log_table;
    const FieldData* prime_subfield = nullptr;
};

}  // namespace detail

namespace {

using detail::Digits;
using detail::FieldData;

constexpr std::uint64_t kLogTableLimit = 4096;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// Polynomials over F_p as digit vectors, low degree first, without trailing zeros.
void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

Digits poly_rem(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

Digits monic_from_index(std::uint64_t index, unsigned degree, std::uint32_t p) {
    Digits d(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        d[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    d[degree] = 1;
    return d;
}

bool is_irreducible(const Digits& modulus, std::uint32_t p) {
    const unsigned m = static_cast<unsigned>(modulus.size() - 1);
    if (m == 1) return true;
    for (unsigned k = 1; k <= m / 2; ++k) {
        const std::uint64_t count = ipow(p, k);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (poly_rem(modulus, monic_from_index(idx, k, p), p).empty()) return false;
        }
    }
    return true;
}

Digits decode(const FieldData& f, std::uint64_t index) {
    Digits d(f.m, 0);
    for (unsigned i = 0; i < f.m; ++i) {
        d[i] = static_cast<std::uint32_t>(index % f.p);
        index /= f.p;
    }
    return d;
}

std::uint64_t encode(const FieldData& f, const Digits& d) {
    std::uint64_t index = 0;
    for (unsigned i = f.m; i-- > 0;) index = index * f.p + (i < d.size() ? d[i] : 0);
    return index;
}

std::uint64_t poly_mul_index(const FieldData& f, std::uint64_t a, std::uint64_t b) {
    const Digits da = decode(f, a);
    const Digits db = decode(f, b);
    std::vector<std::uint64_t> prod(2 * f.m - 1, 0);
    for (unsigned i = 0; i < f.m; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < f.m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % f.p;
    }
    Digits out(f.m, 0);
    for (unsigned i = 0; i < f.m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    for (unsigned k = f.m; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const Digits& red = f.reduction[k - f.m];
        for (unsigned i = 0; i < f.m; ++i) out[i] = static_cast<std::uint32_t>((out[i] + prod[k] * red[i]) % f.p);
    }
    return encode(f, out);
}

void build_tables(FieldData& f) {
    // reduction of t^k, k = m .. 2m-2
    Digits current(f.m, 0);  // t^{m} = -(lower part of modulus)
    for (unsigned i = 0; i < f.m; ++i) current[i] = (f.p - f.modulus[i]) % f.p;
    for (unsigned k = f.m; k + 1 < 2 * f.m; ++k) {
        f.reduction.push_back(current);
        // multiply by t
        Digits next(f.m, 0);
        const std::uint32_t top = current[f.m - 1];
        for (unsigned i = f.m - 1; i > 0; --i) next[i] = current[i - 1];
        for (unsigned i = 0; i < f.m; ++i) next[i] = static_cast<std::uint32_t>((next[i] + std::uint64_t{top} * ((f.p - f.modulus[i]) % f.p)) % f.p);
        current = next;
    }
    if (f.q > kLogTableLimit) return;
    for (std::uint64_t g = 2; g < f.q; ++g) {
        std::vector<std::uint32_t> exp_table;
        exp_table.reserve(f.q - 1);
        std::uint64_t x = 1;
        do {
            exp_table.push_back(static_cast<std::uint32_t>(x));
            x = poly_mul_index(f, x, g);
        } while (x != 1 && exp_table.size() < f.q);
        if (exp_table.size() == f.q - 1) {
            f.log_table.assign(f.q, 0);
            for (std::uint32_t i = 0; i < exp_table.size(); ++i) f.log_table[exp_table[i]] = i;
            f.exp_table = std::move(exp_table);
            return;
        }
    }
}

struct Registry {
    std::mutex mutex;
    std::map<std::pair<std::uint32_t, Digits>, std::unique_ptr<FieldData>> fields;
    FieldData rationals;
};

Registry& registry() {
    static Registry r;
    return r;
}

const FieldData* intern(std::uint32_t p, const Digits& modulus) {
    Registry& r = registry();
    std::lock_guard lock(r.mutex);
    auto key = std::make_pair(p, modulus);
    if (auto it = r.fields.find(key); it != r.fields.end()) return it->second.get();
    auto data = std::make_unique<FieldData>();
    data->p = p;
    data->m = static_cast<unsigned>(modulus.size() - 1);
    data->q = ipow(p, data->m);
    if (data->m == 1) {
        data->kind = FieldKind::prime;
        data->modulus.clear();
    } else {
        data->kind = FieldKind::extension;
        data->modulus = modulus;
        build_tables(*data);
    }
    FieldData* raw = data.get();
    r.fields.emplace(std::move(key), std::move(data));
    if (raw->m == 1) {
        raw->prime_subfield = raw;
    } else {
        auto prime_key = std::make_pair(p, Digits{0, 1});
        auto it = r.fields.find(prime_key);
        if (it == r.fields.end()) {
            auto prime = std::make_unique<FieldData>();
            prime->kind = FieldKind::prime;
            prime->p = p;
            prime->q = p;
            prime->prime_subfield = prime.get();
            it = r.fields.emplace(prime_key, std::move(prime)).first;
        }
        raw->prime_subfield = it->second.get();
    }
    return raw;
}

void check_odd_prime(std::uint32_t p) {
    if (!is_prime(p)) fail("field characteristic " + std::to_string(p) + " is not prime");
    if (p == 2) fail("characteristic 2 is not supported");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::rationals() {
    Registry& r = registry();
    return Field(&r.rationals);
}

Field Field::prime(std::uint32_t p) {
    check_odd_prime(p);
    return Field(intern(p, Digits{0, 1}));
}

Field Field::extension(std::uint32_t p, unsigned m) {
    check_odd_prime(p);
    if (m == 0) fail("extension degree must be at least 1");
    if (m == 1) return prime(p);
    const std::uint64_t count = ipow(p, m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Digits candidate = monic_from_index(idx, m, p);
        if (candidate[0] == 0) continue;  // divisible by t
        if (is_irreducible(candidate, p)) return Field(intern(p, candidate));
    }
    defect("no irreducible polynomial found");
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    check_odd_prime(p);
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) fail("modulus must be monic of degree >= 1");
    if (modulus.size() == 2) return prime(p);
    if (!is_irreducible(modulus, p)) fail("modulus is reducible over F" + std::to_string(p));
    return Field(intern(p, modulus));
}

FieldKind Field::kind() const { return data_->kind; }
std::uint32_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->m; }

std::uint64_t Field::order() const {
    if (!is_finite()) fail("Q has no finite order");
    return data_->q;
}

std::span<const std::uint32_t> Field::modulus() const { return data_->modulus; }

Field Field::prime_subfield() const {
    if (!is_finite()) return *this;
    return Field(data_->prime_subfield);
}

std::string Field::to_string() const {
    switch (kind()) {
        case FieldKind::rationals:
            return "Q";
        case FieldKind::prime:
            return "F" + std::to_string(data_->p);
        case FieldKind::extension: {
            std::string mod;
            for (unsigned i = data_->m + 1; i-- > 0;) {
                const std::uint32_t c = data_->modulus[i];
                if (c == 0) continue;
                if (!mod.empty()) mod += "+";
                if (i == 0) {
                    mod += std::to_string(c);
                } else {
                    if (c != 1) mod += std::to_string(c) + "*";
                    mod += i == 1 ? "t" : "t^" + std::to_string(i);
                }
            }
            return "F" + std::to_string(data_->q) + "[t]/(" + mod + ")";
        }
    }
    return {};
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
    const FieldData& f = *data_;
    if (f.m == 1) return (a + b) % f.p;
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < f.m; ++i) {
        out += ((a % f.p + b % f.p) % f.p) * scale;
        a /= f.p;
        b /= f.p;
        scale *= f.p;
    }
    return out;
}

std::uint64_t Field::neg(std::uint64_t a) const {
    const FieldData& f = *data_;
    if (f.m == 1) return a == 0 ? 0 : f.p - a;
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < f.m; ++i) {
        out += ((f.p - a % f.p) % f.p) * scale;
        a /= f.p;
        scale *= f.p;
    }
    return out;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    const FieldData& f = *data_;
    if (f.m == 1) return mulmod(a, b, f.p);
    if (a == 0 || b == 0) return 0;
    if (!f.exp_table.empty()) {
        const std::uint64_t e = (std::uint64_t{f.log_table[a]} + f.log_table[b]) % (f.q - 1);
        return f.exp_table[e];
    }
    return poly_mul_index(f, a, b);
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0) fail("division by zero");
    const FieldData& f = *data_;
    if (!f.exp_table.empty()) return f.exp_table[(f.q - 1 - f.log_table[a]) % (f.q - 1)];
    std::uint64_t r = 1, base = a, e = f.q - 2;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------

Elem::Elem(Field field) : field_(field) {
    if (field.is_finite()) {
        value_ = std::uint64_t{0};
    } else {
        value_ = mpq_class(0);
    }
}

Elem Elem::from_int(Field field, long long value) {
    if (!field.is_finite()) return Elem(field, mpq_class(static_cast<long>(value)));
    const long long p = field.characteristic();
    long long r = value % p;
    if (r < 0) r += p;
    return Elem(field, static_cast<std::uint64_t>(r));
}

Elem Elem::from_rational(Field field, const mpq_class& value) {
    if (field.is_finite()) {
        const mpz_class p = field.characteristic();
        mpz_class num = value.get_num() % p;
        mpz_class den = value.get_den() % p;
        if (num < 0) num += p;
        if (den == 0) fail("denominator divisible by the characteristic");
        return from_int(field, num.get_si()) / from_int(field, den.get_si());
    }
    mpq_class v = value;
    v.canonicalize();
    return Elem(field, std::move(v));
}

Elem Elem::from_index(Field field, std::uint64_t index) {
    if (!field.is_finite() || index >= field.order()) fail("element index out of range");
    return Elem(field, index);
}

Elem Elem::from_coeffs(Field field, std::span<const long long> coeffs) {
    if (!field.is_finite()) fail("polynomial literals in t need an extension field");
    Elem out(field);
    Elem power = from_int(field, 1);
    const Elem t = field.degree() > 1 ? generator(field) : from_int(field, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0 && field.degree() == 1) fail("generator t used over a prime field");
        out += from_int(field, coeffs[i]) * power;
        power *= t;
    }
    return out;
}

Elem Elem::generator(Field field) {
    if (field.kind() != FieldKind::extension) fail("generator t used outside an extension field");
    return Elem(field, std::uint64_t{field.characteristic()});
}

bool Elem::is_zero() const {
    if (const auto* v = std::get_if<std::uint64_t>(&value_)) return *v == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Elem::is_one() const {
    if (const auto* v = std::get_if<std::uint64_t>(&value_)) return *v == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Elem::index() const {
    if (const auto* v = std::get_if<std::uint64_t>(&value_)) return *v;
    fail("rational number has no finite field index");
}

const mpq_class& Elem::rational() const {
    if (const auto* v = std::get_if<mpq_class>(&value_)) return *v;
    fail("finite field element is not rational");
}

std::vector<std::uint32_t> Elem::coeffs() const { return decode(*field_.data_, index()); }

bool Elem::in_prime_subfield() const {
    if (!field_.is_finite()) return true;
    return index() < field_.characteristic();
}

Elem Elem::cast(Field target) const {
    if (target == field_) return *this;
    if (!target.is_finite() || !field_.is_finite() || target.characteristic() != field_.characteristic() ||
        !in_prime_subfield()) {
        fail("cannot move " + to_string() + " from " + field_.to_string() + " to " + target.to_string());
    }
    return Elem(target, index());
}

namespace {
void same_field(const Elem& a, const Elem& b) {
    if (!(a.field() == b.field())) fail("field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
}
}  // namespace

Elem operator+(const Elem& a, const Elem& b) {
    same_field(a, b);
    if (a.field_.is_finite()) return Elem(a.field_, a.field_.add(a.index(), b.index()));
    return Elem(a.field_, mpq_class(a.rational() + b.rational()));
}

Elem operator-(const Elem& a, const Elem& b) {
    same_field(a, b);
    if (a.field_.is_finite()) return Elem(a.field_, a.field_.sub(a.index(), b.index()));
    return Elem(a.field_, mpq_class(a.rational() - b.rational()));
}

Elem operator*(const Elem& a, const Elem& b) {
    same_field(a, b);
    if (a.field_.is_finite()) return Elem(a.field_, a.field_.mul(a.index(), b.index()));
    return Elem(a.field_, mpq_class(a.rational() * b.rational()));
}

Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }

Elem operator-(const Elem& a) {
    if (a.field_.is_finite()) return Elem(a.field_, a.field_.neg(a.index()));
    return Elem(a.field_, mpq_class(-a.rational()));
}

bool operator==(const Elem& a, const Elem& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

Elem Elem::inverse() const {
    if (is_zero()) fail("division by zero");
    if (field_.is_finite()) return Elem(field_, field_.inv(index()));
    return Elem(field_, mpq_class(1 / rational()));
}

Elem Elem::pow(std::uint64_t e) const {
    Elem result = from_int(field_, 1);
    Elem base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Elem Elem::frobenius() const {
    if (!field_.is_finite()) fail("Frobenius is defined on finite fields only");
    return pow(field_.characteristic());
}

std::string Elem::to_string() const {
    if (!field_.is_finite()) return rational().get_str();
    if (field_.degree() == 1) return std::to_string(index());
    const auto digits = coeffs();
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(digits[i]);
            continue;
        }
        if (digits[i] != 1) out += std::to_string(digits[i]) + "*";
        out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::optional<Elem> is_square(const Elem& a) {
    const Field f = a.field();
    if (!f.is_finite()) fail("square test is defined on finite fields only");
    if (a.is_zero()) fail("square test of zero");
    const std::uint64_t q = f.order();
    if (!a.pow((q - 1) / 2).is_one()) return std::nullopt;
    for (std::uint64_t i = 1; i < q; ++i) {
        if (f.mul(i, i) == a.index()) return Elem::from_index(f, i);
    }
    defect("Euler criterion passed but no square root exists");
}

std::optional<Elem> rational_sqrt(const Elem& a) {
    const mpq_class& v = a.rational();
    if (v < 0) return std::nullopt;
    if (mpz_perfect_square_p(v.get_num().get_mpz_t()) == 0 || mpz_perfect_square_p(v.get_den().get_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), v.get_den().get_mpz_t());
    return Elem::from_rational(a.field(), mpq_class(num, den));
}

}  // namespace kzero
