// Copyright 2026 The gaugeqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gaugeqc/io.hpp"

namespace gqc::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kValidationError = 3,
    kCheckFailed = 4,
};

struct CheckResult {
    std::string name;
    double deviation;
    double tolerance;
    bool pass;
};

/// Machine-readable record of one command invocation. Serialization is
/// byte-stable for identical inputs; wall time is only emitted on request.
class RunReport {
   public:
    explicit RunReport(std::string command) : command_(std::move(command)) {}

    /// Folds text into the inputs digest (FNV-1a, 64 bit).
    void add_input(std::string_view text);

    Json& results() noexcept { return results_; }
    const Json& results() const noexcept { return results_; }

    /// Records deviation <= tolerance as a named check.
    void add_check(std::string name, double deviation, double tolerance);
    void add_boolean_check(std::string name, bool pass);

    bool passed() const;
    double max_deviation() const;
    const std::vector<CheckResult>& checks() const noexcept { return checks_; }

    void set_wall_seconds(double seconds) noexcept { wall_seconds_ = seconds; }

    Json to_json(bool include_timing) const;
    /// One line per check plus a status line, for standard error.
    std::string summary() const;

   private:
    std::string command_;
    std::uint64_t digest_ = 14695981039346656037ULL;
    Json results_ = Json::object();
    std::vector<CheckResult> checks_;
    double wall_seconds_ = 0.0;
};

}  // namespace gqc::cli
