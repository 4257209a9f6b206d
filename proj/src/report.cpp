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

#include "kzero/report.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <sstream>

#include "kzero/error.hpp"
#include "kzero/text.hpp"

namespace kzero {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::pair<Command, std::string_view>, 9> command_names{{
    {Command::count, "count"},
    {Command::class_quadric, "class-quadric"},
    {Command::class_arrangement, "class-arrangement"},
    {Command::class_cone, "class-cone"},
    {Command::class_cubic_singular, "class-cubic-singular"},
    {Command::class_two_quadrics, "class-two-quadrics"},
    {Command::descend, "descend"},
    {Command::verify, "verify"},
    {Command::selftest, "selftest"},
}};

std::uint64_t parse_uint(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return v;
}

json to_json(const std::optional<long long>& v) { return v ? json(*v) : json("indeterminate"); }

std::string residue_text(const std::optional<long long>& v) { return v ? std::to_string(*v) : "indeterminate"; }

struct Context {
    const JobSpec& job;
    Field field;
    CountOptions count;
    SearchOptions search;
};

std::vector<HomogPoly> parse_all(const std::vector<std::string>& src, Field field, unsigned nvars) {
    std::vector<HomogPoly> out;
    for (const auto& s : src) out.push_back(parse_poly(s, field, nvars));
    return out;
}

std::vector<HomogPoly> polys_of(const Context& c, std::size_t expected = 0) {
    if (c.job.polys.empty()) fail("no --poly given");
    if (expected != 0 && c.job.polys.size() != expected) {
        fail("expected " + std::to_string(expected) + " --poly argument(s), got " + std::to_string(c.job.polys.size()));
    }
    return parse_all(c.job.polys, c.field, c.job.ambient + 1);
}

std::vector<HomogPoly> forms_of(const Context& c) {
    const auto& src = c.job.forms.empty() ? c.job.polys : c.job.forms;
    if (src.empty()) fail("no --form given");
    return parse_all(src, c.field, c.job.ambient + 1);
}

std::optional<Vector> point_of(const Context& c) {
    if (!c.job.point) return std::nullopt;
    Vector v;
    std::string_view rest = *c.job.point;
    while (true) {
        const auto comma = rest.find(',');
        v.push_back(parse_elem(rest.substr(0, comma), c.field));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return v;
}

json echo_input(const JobSpec& job, Field field) {
    json in;
    in["field"] = field.to_string();
    in["ambient"] = job.ambient;
    if (!job.polys.empty()) in["polys"] = job.polys;
    if (!job.forms.empty()) in["forms"] = job.forms;
    if (job.point) in["point"] = *job.point;
    if (job.command == Command::descend) in["seed"] = job.seed;
    if (!field.is_finite()) in["height"] = job.height;
    return in;
}

/// Adds class, trace and verification of an engine result.  Returns false on a mismatch.
bool describe_result(const Context& c, const StratResult& r, json& doc, std::ostringstream& text) {
    doc["class"] = r.class_expr.to_json();
    doc["class_text"] = r.class_expr.to_string();
    doc["residue_mod_L"] = to_json(r.residue);
    text << "class: " << r.class_expr.to_string() << "\n";
    text << "residue mod L: " << residue_text(r.residue) << "\n";

    json hyps = json::array();
    for (const auto& h : r.hypotheses) {
        hyps.push_back(json{{"name", h.name}, {"passed", h.passed}});
        text << "hypothesis " << (h.passed ? "[ok]   " : "[flag] ") << h.name << "\n";
    }
    doc["hypotheses"] = hyps;

    const bool run_checks = c.job.verify && c.field.is_finite();
    std::optional<Verification> v;
    if (run_checks) v = verify(r, c.count);

    json steps = json::array();
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
        const auto& s = r.trace.steps[i];
        json step;
        step["tag"] = s.tag;
        step["description"] = s.description;
        if (s.identity) step["identity"] = to_json(*s.identity);
        const CheckStatus status = v ? v->steps[i].status : CheckStatus::skipped;
        step["status"] = to_string(status);
        text << "step [" << to_string(status) << "] " << s.tag;
        if (v && v->steps[i].value) {
            step["lhs"] = v->steps[i].value->lhs;
            step["rhs"] = v->steps[i].value->rhs;
            text << "  " << v->steps[i].value->lhs << " = " << v->steps[i].value->rhs;
        }
        text << "  " << s.description << "\n";
        steps.push_back(step);
    }
    doc["trace"] = steps;

    json oracle;
    oracle["status"] = to_string(v ? v->master : CheckStatus::skipped);
    if (v) {
        oracle["count_measure"] = *v->measure;
        oracle["count_points"] = *v->oracle;
        text << "oracle: count_measure " << *v->measure << (*v->measure == *v->oracle ? " = " : " != ")
             << "count_points " << *v->oracle << "\n";
    } else {
        text << "oracle: skipped\n";
    }
    doc["oracle"] = oracle;
    const bool ok = !v || v->passed();
    doc["status"] = v ? (ok ? "pass" : "fail") : "unverified";
    text << "status: " << doc["status"].get<std::string>() << "\n";
    return ok;
}

bool run_count(const Context& c, json& doc, std::ostringstream& text) {
    if (!c.field.is_finite()) fail("count needs a finite field");
    const CountQuery q{c.field, c.job.ambient, c.job.polys.empty() ? std::vector<HomogPoly>{} : polys_of(c), {}};
    const auto n = count_points(q, c.count);
    doc["locus"] = q.describe();
    doc["count"] = n;
    doc["status"] = "pass";
    text << "#" << q.describe() << " over " << c.field.to_string() << " = " << n << "\n";
    return true;
}

bool run_descend(const Context& c, json& doc, std::ostringstream& text) {
    if (c.field.kind() != FieldKind::extension) fail("descend needs an extension field --field p,m");
    const auto ctx = GaloisContext::make(c.field.characteristic(), c.field.degree());
    const auto forms = forms_of(c);
    const Descent d = descend_subspace(ctx, forms, c.job.seed);
    json basis = json::array();
    text << "descended basis over " << ctx.base.to_string() << ":\n";
    for (const auto& b : d.basis) {
        basis.push_back(to_string(b));
        text << "  " << to_string(b) << "\n";
    }
    doc["basis"] = basis;
    const bool h90_ok = d.stability.cocycle.images[1] * ctx.frobenius(d.h90.b) == d.h90.b;
    doc["h90"] = json{{"attempts", d.h90.attempts}, {"status", h90_ok ? "pass" : "fail"}};
    text << "h90: alpha_sigma * sigma(B) = B " << (h90_ok ? "holds" : "FAILS") << " after " << d.h90.attempts
         << " attempt(s)\n";

    HomogPoly f = HomogPoly::constant(ctx.ext, c.job.ambient + 1, Elem::from_int(ctx.ext, 1));
    for (const auto& h : forms) f = f * h.monic();
    bool rational = true;
    for (const auto& t : f.monic().terms()) rational = rational && t.coefficient.in_prime_subfield();
    if (!rational) {
        doc["status"] = h90_ok ? "pass" : "fail";
        text << "product of the forms is not defined over " << ctx.base.to_string() << "; no class computed\n";
        return h90_ok;
    }
    const StratResult r = class_of_descended_arrangement(ctx, forms, c.job.seed, c.search);
    Context base_ctx{c.job, ctx.base, c.count, c.search};
    return describe_result(base_ctx, r, doc, text) && h90_ok;
}

StratResult dispatch_family(const Context& c, Command command) {
    switch (command) {
        case Command::class_quadric:
            return class_of_quadric(polys_of(c, 1).front(), c.search);
        case Command::class_arrangement:
            return class_of_arrangement(forms_of(c), c.search);
        case Command::class_cone: {
            if (c.job.ambient == 0) fail("a cone needs ambient >= 1");
            if (c.job.polys.empty()) fail("no --poly given");
            return class_of_cone(parse_all(c.job.polys, c.field, c.job.ambient), c.search);
        }
        case Command::class_cubic_singular:
            return class_of_singular_cubic(polys_of(c, 1).front(), point_of(c), c.search);
        case Command::class_two_quadrics: {
            const auto p = polys_of(c, 2);
            return class_of_two_quadric_union(p[0], p[1], c.search);
        }
        default:
            defect("not an engine command");
    }
}

/// Family of a verify job, from the shape of its input.
Command detect_family(const Context& c) {
    if (!c.job.forms.empty()) return c.field.kind() == FieldKind::extension ? Command::descend : Command::class_arrangement;
    const auto p = polys_of(c);
    if (std::all_of(p.begin(), p.end(), [](const HomogPoly& f) { return f.degree() == 1; })) {
        return c.field.kind() == FieldKind::extension ? Command::descend : Command::class_arrangement;
    }
    if (p.size() == 1 && p[0].degree() == 2) return Command::class_quadric;
    if (p.size() == 1 && p[0].degree() == 3) return Command::class_cubic_singular;
    if (p.size() == 2 && p[0].degree() == 2 && p[1].degree() == 2) return Command::class_two_quadrics;
    fail("verify: no family matches the input (one quadric, one cubic, two quadrics, or linear forms)");
}

struct Fixture {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<Fixture> selftest_fixtures(const CountOptions& count) {
    std::vector<Fixture> out;
    const SearchOptions search{10, count};
    for (std::uint32_t p : {5U, 7U}) {
        const Field f = Field::prime(p);
        const auto nodal = parse_poly("x1^2*x2 - x0^3 - x0^2*x2", f, 3);
        const auto n = count_points(CountQuery{f, 2, {nodal}, {}}, count);
        const auto r = class_of_singular_cubic(nodal, std::nullopt, search);
        const bool ok = n % p == 0 && r.residue == 0 && verify(r, count).passed();
        out.push_back({"nodal cubic over F" + std::to_string(p) + " is 0 mod q", ok, std::to_string(n) + " points"});
    }
    {
        const Field f5 = Field::prime(5);
        const auto z = parse_poly("x1^2*x2 - x0^3 - x0*x2^2 - x2^3", f5, 3);
        const auto nz = count_points(CountQuery{f5, 2, {z}, {}}, count);
        const auto r = class_of_cone({z}, search);
        const auto nx = count_points(r.input, count);
        out.push_back({"cone over a plane cubic over F5: #X = 1 + 5 #Z", nx == 1 + 5 * nz && verify(r, count).passed(),
                       std::to_string(nx) + " = 1 + 5*" + std::to_string(nz)});
    }
    {
        bool ok = true;
        for (std::uint32_t p : {3U, 5U, 7U}) {
            for (int n = 0; n <= 4; ++n) {
                const auto cnt = count_points(CountQuery{Field::prime(p), static_cast<unsigned>(n), {}, {}}, count);
                ok = ok && count_measure(projective_space_class(n), p) == static_cast<long long>(cnt);
            }
        }
        out.push_back({"[P^n] matches enumeration for n <= 4, q in {3,5,7}", ok, ""});
    }
    {
        const Field f3 = Field::prime(3);
        const auto r = class_of_quadric(parse_poly("x0*x1 - x2*x3", f3, 4), search);
        out.push_back({"quadric x0*x1 - x2*x3 over F3", r.class_expr.to_string() == "1 + 2L + L^2" && verify(r, count).passed(),
                       r.class_expr.to_string()});
        const auto a = class_of_arrangement({parse_poly("x0", f3, 4), parse_poly("x1", f3, 4), parse_poly("x2", f3, 4)}, search);
        out.push_back({"coordinate planes in P^3 over F3", count_measure(a.class_expr, 3) == 28 && verify(a, count).passed(),
                       a.class_expr.to_string()});
    }
    {
        const auto ctx = GaloisContext::make(3, 2);
        for (unsigned n : {2U, 3U}) {
            const std::vector<HomogPoly> forms{parse_poly("x0 + t*x1", ctx.ext, n + 1), parse_poly("x0 - t*x1", ctx.ext, n + 1)};
            const auto r = class_of_descended_arrangement(ctx, forms);
            const long long expected = n == 2 ? 1 : 4;
            const auto cnt = count_points(r.input, count);
            out.push_back({"descent over F9/F3 in P^" + std::to_string(n),
                           count_measure(r.class_expr, 3) == expected && cnt == static_cast<std::uint64_t>(expected) &&
                               verify(r, count).passed(),
                           std::to_string(cnt) + " points"});
        }
    }
    {
        const Field f3 = Field::prime(3);
        const auto r = class_of_two_quadric_union(parse_poly("x0*x1 - x2*x3 - x4^2", f3, 5),
                                                  parse_poly("x0^2 + x1*x2 + x3*x4", f3, 5), search);
        const auto cnt = count_points(r.input, count);
        out.push_back({"two quadrics in P^4 over F3", cnt % 3 == 1 && verify(r, count).passed(), std::to_string(cnt) + " points"});
    }
    return out;
}

bool run_selftest(const Context& c, json& doc, std::ostringstream& text) {
    json items = json::array();
    bool all = true;
    for (const auto& f : selftest_fixtures(c.count)) {
        items.push_back(json{{"name", f.name}, {"passed", f.passed}, {"detail", f.detail}});
        text << (f.passed ? "PASS " : "FAIL ") << f.name;
        if (!f.detail.empty()) text << " (" << f.detail << ")";
        text << "\n";
        all = all && f.passed;
    }
    doc["fixtures"] = items;
    doc["status"] = all ? "pass" : "fail";
    return all;
}

}  // namespace

Command parse_command(std::string_view name) {
    for (const auto& [c, n] : command_names) {
        if (n == name) return c;
    }
    fail("unknown command '" + std::string(name) + "'");
}

std::string to_string(Command c) {
    for (const auto& [k, n] : command_names) {
        if (k == c) return std::string(n);
    }
    return "?";
}

Field parse_field(std::string_view text) {
    if (text == "Q" || text == "q") return Field::rationals();
    const auto comma = text.find(',');
    const auto p = parse_uint(text.substr(0, comma), "characteristic");
    if (p > 1'000'000) fail("characteristic too large");
    if (comma == std::string_view::npos) return Field::prime(static_cast<std::uint32_t>(p));
    const auto m = parse_uint(text.substr(comma + 1), "extension degree");
    if (m == 0 || m > 64) fail("bad extension degree");
    return Field::extension(static_cast<std::uint32_t>(p), static_cast<unsigned>(m));
}

Report run(const JobSpec& job) {
    Report report;
    json& doc = report.doc;
    std::ostringstream text;
    doc["command"] = to_string(job.command);
    const auto start = std::chrono::steady_clock::now();
    try {
        const Field field = parse_field(job.field);
        const CountOptions count{job.budget, job.threads};
        const Context c{job, field, count, SearchOptions{job.height, count}};
        if (job.command != Command::selftest) {
            doc["input"] = echo_input(job, field);
            text << to_string(job.command) << " over " << field.to_string() << " in P^" << job.ambient << "\n";
        }
        Command command = job.command;
        if (command == Command::verify) {
            command = detect_family(c);
            doc["family"] = to_string(command);
            text << "family: " << to_string(command) << "\n";
        }
        bool ok = true;
        switch (command) {
            case Command::count:
                ok = run_count(c, doc, text);
                break;
            case Command::descend:
                ok = run_descend(c, doc, text);
                break;
            case Command::selftest:
                ok = run_selftest(c, doc, text);
                break;
            default: {
                JobSpec forced = job;
                if (job.command == Command::verify) forced.verify = true;
                const Context vc{forced, field, count, c.search};
                ok = describe_result(vc, dispatch_family(vc, command), doc, text);
                break;
            }
        }
        report.exit_code = ok ? 0 : 3;
    } catch (const Error& e) {
        const bool defect_kind = e.kind() == ErrorKind::defect;
        doc["error"] = json{{"kind", e.kind() == ErrorKind::precondition ? "precondition"
                                     : e.kind() == ErrorKind::budget   ? "budget"
                                                                       : "defect"},
                            {"message", e.what()}};
        doc["status"] = "error";
        text << "error: " << e.what() << "\n";
        report.exit_code = defect_kind ? 3 : 2;
    }
    if (job.timing) {
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        doc["timing"] = json{{"seconds", seconds}};
        text << "time: " << seconds << " s\n";
    }
    report.text = text.str();
    return report;
}

}  // namespace kzero
