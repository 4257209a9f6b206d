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

#include <cstdlib>
#include <iostream>
#include <utility>

#include "CLI11.hpp"
#include "kzero/report.hpp"

namespace {

void add_job_options(CLI::App* sub, kzero::JobSpec& job) {
    sub->add_option("--field", job.field, "p, p,m or Q")->capture_default_str();
    sub->add_option("--ambient", job.ambient, "n for P^n")->capture_default_str();
    sub->add_option("--poly", job.polys, "homogeneous polynomial (repeatable)");
    sub->add_option("--form", job.forms, "linear form (repeatable)");
    sub->add_option("--point", job.point, "coordinates i0,i1,...");
    sub->add_option("--seed", job.seed, "descent seed")->capture_default_str();
    sub->add_option("--height", job.height, "search height over Q")->capture_default_str();
    sub->add_option("--budget", job.budget, "point enumeration budget")->envname("KZERO_BUDGET")->capture_default_str();
    sub->add_option("--threads", job.threads, "worker threads (0 = hardware)");
    sub->add_flag("--timing", job.timing, "include wall time in the report");
    sub->add_flag("!--no-verify", job.verify, "skip count verification");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grothendieck ring classes of low degree varieties"};
    app.require_subcommand(1, 1);
    bool json = false;
    app.add_flag("--json", json, "print the report as JSON");

    kzero::JobSpec job;
    const std::pair<const char*, const char*> commands[] = {
        {"count", "count F_q-points of V(polys) in P^n"},
        {"class-quadric", "class of a quadric hypersurface"},
        {"class-arrangement", "class of a union of hyperplanes"},
        {"class-cone", "class of the cone over V(polys) in P^(n-1)"},
        {"class-cubic-singular", "class of a cubic with a rational singular point"},
        {"class-two-quadrics", "class of the union of two quadrics"},
        {"descend", "descend a Frobenius-stable span of linear forms"},
        {"verify", "detect the family, compute the class and check it"},
        {"selftest", "run the built-in fixtures"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_job_options(sub, job);
        sub->add_flag("--json", json, "print the report as JSON");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    int code = 2;
    try {
        job.command = kzero::parse_command(app.get_subcommands().front()->get_name());
        const auto report = kzero::run(job);
        if (json) {
            std::cout << report.doc.dump(2) << "\n";
        } else {
            std::cout << report.text;
        }
        code = report.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return code;
}
