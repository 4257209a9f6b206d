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

#include "kzero/kclass.hpp"

#include <algorithm>

#include "kzero/error.hpp"
#include "kzero/text.hpp"

namespace kzero {

namespace {

long long ipow(long long base, unsigned e) {
    long long r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

std::string lefschetz_text(unsigned k) {
    if (k == 0) return "";
    if (k == 1) return "L";
    return "L^" + std::to_string(k);
}

}  // namespace

Atom Atom::etale(std::vector<unsigned> degrees) {
    if (degrees.empty()) fail("etale atom needs at least one factor");
    for (unsigned d : degrees) {
        if (d == 0) fail("etale residue degrees must be >= 1");
    }
    std::sort(degrees.begin(), degrees.end());
    return Atom(EtaleAtom{std::move(degrees)});
}

Atom Atom::variety(std::string label, unsigned ambient, std::vector<HomogPoly> generators) {
    if (generators.empty()) fail("variety atom needs generators");
    const Field field = generators.front().field();
    for (const auto& g : generators) {
        if (!(g.field() == field) || g.nvars() != ambient + 1) fail("variety atom generators disagree on field or ambient");
    }
    return Atom(VarietyAtom{field, ambient, std::move(generators), std::move(label), false});
}

std::string Atom::label() const {
    if (is_etale()) {
        std::string out = "etale{";
        const auto& d = as_etale().degrees;
        for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
        return out + "}";
    }
    return as_variety().label;
}

std::string Atom::key() const {
    if (is_etale()) return label();
    std::string out = label() + "|P^" + std::to_string(as_variety().ambient);
    for (const auto& g : as_variety().generators) out += "|" + to_string(g);
    return out;
}

CountQuery Atom::query() const {
    if (is_etale()) fail("etale atoms have no count query");
    const auto& v = as_variety();
    return CountQuery{v.field, v.ambient, v.generators, {}};
}

std::uint64_t Atom::count(const CountOptions& options) const {
    if (is_etale()) {
        const auto& d = as_etale().degrees;
        return static_cast<std::uint64_t>(std::count(d.begin(), d.end(), 1U));
    }
    if (!as_variety().field.is_finite()) fail("uncountable atom over Q: " + label());
    return count_points(query(), options);
}

nlohmann::ordered_json Atom::to_json() const {
    nlohmann::ordered_json j;
    if (is_etale()) {
        j["kind"] = "etale";
        j["degrees"] = as_etale().degrees;
        return j;
    }
    const auto& v = as_variety();
    j["kind"] = "variety";
    j["label"] = v.label;
    j["field"] = v.field.to_string();
    j["ambient"] = v.ambient;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : v.generators) gens.push_back(to_string(g));
    j["generators"] = gens;
    j["resolved"] = v.resolved;
    return j;
}

// ---------------------------------------------------------------------------

ClassExpr ClassExpr::constant(long long c) { return lefschetz(0, c); }

ClassExpr ClassExpr::lefschetz(unsigned k, long long c) {
    ClassExpr e;
    e.add_coefficient(k, c);
    return e;
}

ClassExpr ClassExpr::of_atom(Atom atom, unsigned shift, long long multiplicity) {
    ClassExpr e;
    e.add_residual(shift, multiplicity, atom);
    return e;
}

long long ClassExpr::coefficient(unsigned k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
}

bool ClassExpr::is_fully_resolved() const {
    return std::all_of(residuals_.begin(), residuals_.end(), [](const Residual& r) { return r.atom.is_etale(); });
}

ClassExpr ClassExpr::polynomial_part() const {
    ClassExpr e;
    e.coeffs_ = coeffs_;
    return e;
}

void ClassExpr::add_coefficient(unsigned k, long long c) {
    if (c == 0) return;
    auto& slot = coeffs_[k];
    slot += c;
    if (slot == 0) coeffs_.erase(k);
}

void ClassExpr::add_residual(unsigned shift, long long multiplicity, const Atom& atom) {
    if (multiplicity == 0) return;
    const std::string key = atom.key();
    for (auto it = residuals_.begin(); it != residuals_.end(); ++it) {
        if (it->shift == shift && it->atom.key() == key) {
            it->multiplicity += multiplicity;
            if (it->multiplicity == 0) residuals_.erase(it);
            return;
        }
    }
    Residual r{shift, multiplicity, atom};
    auto pos = std::find_if(residuals_.begin(), residuals_.end(), [&](const Residual& other) {
        if (other.shift != shift) return other.shift > shift;
        if (other.atom.label() != atom.label()) return other.atom.label() > atom.label();
        return other.atom.key() > key;
    });
    residuals_.insert(pos, std::move(r));
}

ClassExpr ClassExpr::lshift(unsigned k) const {
    ClassExpr e;
    for (const auto& [i, c] : coeffs_) e.coeffs_[i + k] = c;
    e.residuals_ = residuals_;
    for (auto& r : e.residuals_) r.shift += k;
    return e;
}

ClassExpr ClassExpr::scaled(long long c) const {
    ClassExpr e;
    if (c == 0) return e;
    for (const auto& [i, v] : coeffs_) e.coeffs_[i] = v * c;
    e.residuals_ = residuals_;
    for (auto& r : e.residuals_) r.multiplicity *= c;
    return e;
}

ClassExpr operator+(const ClassExpr& a, const ClassExpr& b) {
    ClassExpr e = a;
    for (const auto& [i, c] : b.coeffs_) e.add_coefficient(i, c);
    for (const auto& r : b.residuals_) e.add_residual(r.shift, r.multiplicity, r.atom);
    return e;
}

ClassExpr operator-(const ClassExpr& a, const ClassExpr& b) { return a + b.scaled(-1); }

bool operator==(const ClassExpr& a, const ClassExpr& b) {
    if (a.coeffs_ != b.coeffs_ || a.residuals_.size() != b.residuals_.size()) return false;
    for (std::size_t i = 0; i < a.residuals_.size(); ++i) {
        const auto& x = a.residuals_[i];
        const auto& y = b.residuals_[i];
        if (x.shift != y.shift || x.multiplicity != y.multiplicity || x.atom.key() != y.atom.key()) return false;
    }
    return true;
}

std::string ClassExpr::to_string() const {
    std::vector<std::pair<long long, std::string>> parts;  // signed coefficient, body
    for (const auto& [k, c] : coeffs_) parts.emplace_back(c, lefschetz_text(k));
    for (const auto& r : residuals_) {
        const std::string power = lefschetz_text(r.shift);
        parts.emplace_back(r.multiplicity, (power.empty() ? "" : power + "*") + "[" + r.atom.label() + "]");
    }
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& [c, body] = parts[i];
        if (i == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const long long mag = c < 0 ? -c : c;
        if (body.empty()) {
            out += std::to_string(mag);
        } else if (mag != 1) {
            out += std::to_string(mag) + (body.front() == '[' ? "*" : "") + body;
        } else {
            out += body;
        }
    }
    return out;
}

nlohmann::ordered_json ClassExpr::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [k, c] : coeffs_) coeffs[std::to_string(k)] = c;
    j["coeffs"] = coeffs;
    auto residuals = nlohmann::ordered_json::array();
    for (const auto& r : residuals_) {
        nlohmann::ordered_json item;
        item["shift"] = r.shift;
        item["multiplicity"] = r.multiplicity;
        item["atom"] = r.atom.to_json();
        residuals.push_back(item);
    }
    j["residuals"] = residuals;
    return j;
}

ClassExpr projective_space_class(int n) {
    if (n < 0) fail("projective space of negative dimension");
    ClassExpr e;
    for (int i = 0; i <= n; ++i) e = e + ClassExpr::lefschetz(static_cast<unsigned>(i));
    return e;
}

std::optional<long long> residue_mod_L(const ClassExpr& e) {
    long long residue = e.coefficient(0);
    for (const auto& r : e.residuals()) {
        if (r.shift != 0) continue;
        if (!r.atom.is_etale()) return std::nullopt;
        residue += r.multiplicity * static_cast<long long>(r.atom.count());
    }
    return residue;
}

long long count_measure(const ClassExpr& e, std::uint64_t q, const CountOptions& options) {
    long long total = 0;
    const auto qq = static_cast<long long>(q);
    for (const auto& [k, c] : e.coeffs()) total += c * ipow(qq, k);
    for (const auto& r : e.residuals()) {
        if (!r.atom.is_etale()) {
            const Field f = r.atom.as_variety().field;
            if (!f.is_finite()) fail("uncountable atom over Q: " + r.atom.label());
            if (f.order() != q) fail("atom " + r.atom.label() + " lives over " + f.to_string() + ", not F_" + std::to_string(q));
        }
        total += r.multiplicity * ipow(qq, r.shift) * static_cast<long long>(r.atom.count(options));
    }
    return total;
}

// ---------------------------------------------------------------------------

void Trace::append(const Trace& other, const std::string& prefix) {
    for (auto step : other.steps) {
        step.tag = prefix + step.tag;
        steps.push_back(std::move(step));
    }
}

IdentityValue evaluate_identity(const CountIdentity& identity, const CountOptions& options) {
    if (!identity.field.is_finite()) fail("identities can only be counted over finite fields");
    const auto q = static_cast<long long>(identity.field.order());
    auto side = [&](const std::vector<CountTerm>& terms) {
        long long total = 0;
        for (const auto& t : terms) {
            long long value = t.coefficient * ipow(q, t.q_power);
            if (t.locus) value *= static_cast<long long>(count_points(*t.locus, options));
            total += value;
        }
        return total;
    };
    return IdentityValue{side(identity.lhs), side(identity.rhs)};
}

nlohmann::ordered_json to_json(const CountIdentity& identity) {
    auto side = [](const std::vector<CountTerm>& terms) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& t : terms) {
            nlohmann::ordered_json item;
            item["coefficient"] = t.coefficient;
            item["q_power"] = t.q_power;
            item["locus"] = t.locus ? nlohmann::ordered_json(t.locus->describe()) : nlohmann::ordered_json(nullptr);
            arr.push_back(item);
        }
        return arr;
    };
    nlohmann::ordered_json j;
    j["lhs"] = side(identity.lhs);
    j["rhs"] = side(identity.rhs);
    return j;
}

}  // namespace kzero
