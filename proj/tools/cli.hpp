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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace gqc::cli {

struct VerifyPaperOptions {
    /// Test hook: added to one computed entry so the check must fail.
    double perturbation = 0.0;
};

struct RunOptions {
    std::string circuit_file;
    std::string state_bits;  // e.g. "01"; empty means |0...0>
    std::string state_file;  // JSON vector, alternative to state_bits
    std::string dirac = "standard";
    double tolerance = 1e-10;
};

struct DjOptions {
    std::optional<std::size_t> n;
    std::string oracle;       // builtin name or "random-balanced"
    std::string oracle_file;  // {"n": k, "table": [...]}
    std::vector<std::string> diracs;
    std::uint64_t seed = 0;
};

struct EvolveOptions {
    std::string hamiltonian_file;
    double t = 1.0;
    std::optional<std::size_t> steps;
    std::string state_bits;
    std::string state_file;
    std::string dirac = "standard";
    double tolerance = 1e-6;
};

/// Recomputes the single-qubit example matrices on D = sigma_x.
RunReport cmd_verify_paper(const VerifyPaperOptions& options);
/// Gauge run of a circuit file against the state-vector reference.
RunReport cmd_run(const RunOptions& options);
RunReport cmd_dj(const DjOptions& options);
/// Closed-form and RK4 evolution with a group-law spot check at t/2.
RunReport cmd_evolve(const EvolveOptions& options);

/// Full command line. JSON goes to `out`, the human summary and diagnostics
/// to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gqc::cli
