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

// Batch jobs behind the command line: parse the inputs, dispatch to the engine,
// verify against point counts and render a report.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kzero/descent.hpp"

namespace kzero {

enum class Command {
    count,
    class_quadric,
    class_arrangement,
    class_cone,
    class_cubic_singular,
    class_two_quadrics,
    descend,
    verify,
    selftest,
};

Command parse_command(std::string_view name);
std::string to_string(Command c);

/// "p" for F_p, "p,m" for F_{p^m}, "Q" for the rationals.
Field parse_field(std::string_view text);

struct JobSpec {
    Command command = Command::count;
    std::string field = "3";
    unsigned ambient = 2;
    std::vector<std::string> polys;
    std::vector<std::string> forms;
    std::optional<std::string> point;  ///< comma separated coordinates
    std::uint64_t seed = default_descent_seed;
    int height = 10;
    std::uint64_t budget = 100'000'000;
    unsigned threads = 0;
    bool verify = true;
    bool timing = false;
};

struct Report {
    nlohmann::ordered_json doc;
    std::string text;
    int exit_code = 0;
};

/// Never throws for bad input: errors become a report with exit code 2 (precondition or
/// budget) or 3 (defect or verification mismatch).
Report run(const JobSpec& job);

}  // namespace kzero
