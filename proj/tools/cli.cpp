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

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gaugeqc/gaugeqc.hpp"

namespace gqc::cli {

namespace {

constexpr double kExampleTolerance = 1e-12;
constexpr double kGroupLawTolerance = 1e-10;
constexpr double kDjTolerance = 1e-9;
constexpr double kOracleTolerance = 1e-10;

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json load_input(const std::string& path, RunReport& report) {
    const std::string text = read_text(path);
    report.add_input(text);
    return parse_json_text(text, path);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// "standard" (sized to the command), "standard:k", or a triple JSON file.
SpectralTriple resolve_dirac(const std::string& spec, std::size_t dim, RunReport& report) {
    report.add_input("dirac=" + spec);
    SpectralTriple triple = [&] {
        if (spec == "standard") return standard_qubit_triple(qubits_for_dim(dim));
        if (spec == "zsum") return z_qubit_triple(qubits_for_dim(dim));
        const auto number_after = [&](std::size_t prefix) -> std::uint64_t {
            const std::string digits = spec.substr(prefix);
            try {
                std::size_t used = 0;
                const auto value = std::stoull(digits, &used);
                if (used != digits.size() || digits.front() == '-') throw std::invalid_argument(digits);
                return value;
            } catch (const std::exception&) {
                throw ParseError("--dirac: cannot read the number in \"" + spec + "\"");
            }
        };
        if (spec.rfind("standard:", 0) == 0) return standard_qubit_triple(number_after(9));
        if (spec.rfind("random:", 0) == 0) {
            Rng rng(number_after(7));
            return random_triple(dim, rng);
        }
        return triple_from_json(load_input(spec, report));
    }();
    if (triple.dim() != dim) {
        throw ShapeError("--dirac " + spec + ": triple has dimension " + std::to_string(triple.dim()) +
                         ", expected " + std::to_string(dim));
    }
    return triple;
}

UnitVector resolve_state(const std::string& bits, const std::string& file, std::size_t dim, RunReport& report) {
    if (!bits.empty() && !file.empty()) throw ParseError("--state and --state-file are mutually exclusive");
    if (!file.empty()) {
        UnitVector v(vector_from_json(load_input(file, report), "state"));
        if (v.dim() != dim) {
            throw ShapeError("--state-file: state has dimension " + std::to_string(v.dim()) + ", expected " +
                             std::to_string(dim));
        }
        return v;
    }
    if (bits.empty()) {
        report.add_input("state=|0>");
        return UnitVector(basis_vector(dim, 0));
    }
    report.add_input("state=" + bits);
    std::vector<int> b;
    for (const char c : bits) {
        if (c != '0' && c != '1') throw ParseError("--state: expected a bit string, got \"" + bits + "\"");
        b.push_back(c - '0');
    }
    if ((std::size_t{1} << b.size()) != dim) {
        throw ShapeError("--state: " + std::to_string(b.size()) + " bits do not match dimension " +
                         std::to_string(dim));
    }
    return UnitVector(basis_state(b));
}

Json readout_json(const ReadoutSpec& r) {
    Json j;
    j["qubits"] = r.qubits();
    j["bits"] = r.bits();
    return j;
}

}  // namespace

RunReport cmd_verify_paper(const VerifyPaperOptions& options) {
    RunReport report("verify-paper");
    report.add_input("perturbation=" + fmt_double(options.perturbation));

    const SpectralTriple triple{HermitianOperator(pauli_x())};
    const auto v0 = encode_state(basis_vector(2, 0), triple);
    const auto v1 = encode_state(basis_vector(2, 1), triple);
    const auto transform = [](const GaugeState& v, const ComplexMatrix& u) {
        return gauge_transform(v, UnitaryOperator(u)).value_matrix();
    };
    const auto literal = [](double a, double b, double c, double d) {
        ComplexMatrix m(2, 2);
        m << a, b, c, d;
        return m;
    };

    struct Case {
        std::string name;
        ComplexMatrix computed;
        ComplexMatrix expected;
    };
    std::vector<Case> cases{
        {"V_|0>", v0.value_matrix(), literal(1, 0, 0, 0)},
        {"G_sigma_x(V_|0>)", transform(v0, pauli_x()), literal(0, 0, 0, 1)},
        {"G_sigma_y(V_|0>)", transform(v0, pauli_y()), literal(0, -2, -2, 1)},
        {"G_sigma_z(V_|0>)", transform(v0, pauli_z()), literal(1, -2, -2, 0)},
        {"V_|1>", v1.value_matrix(), literal(0, 0, 0, 1)},
        {"G_sigma_y(V_|1>)", transform(v1, pauli_y()), literal(1, -2, -2, 0)},
    };
    cases[0].computed(0, 0) += options.perturbation;

    Json matrices = Json::object();
    for (const auto& c : cases) {
        matrices[c.name] = matrix_to_json(c.computed);
        report.add_check(c.name, max_abs_diff(c.computed, c.expected), kExampleTolerance);
    }
    report.add_check("G_sigma_y(V_|1>) == G_sigma_z(V_|0>)", max_abs_diff(cases[5].computed, cases[3].computed),
                     kExampleTolerance);
    report.results()["dirac"] = matrix_to_json(triple.dirac_matrix());
    report.results()["matrices"] = std::move(matrices);
    return report;
}

RunReport cmd_run(const RunOptions& options) {
    RunReport report("run");
    const CircuitDocument doc = circuit_from_json(load_input(options.circuit_file, report));
    const QuantumCircuit& circuit = doc.circuit;
    const SpectralTriple triple = resolve_dirac(options.dirac, circuit.dim(), report);
    const UnitVector psi = resolve_state(options.state_bits, options.state_file, circuit.dim(), report);

    const GaugeState final_state = run_gauge_computation(circuit, psi, triple);
    const double gauge_p = gauge_readout(final_state, doc.readout);
    const double oracle_p = statevector_oracle(circuit, psi, doc.readout);

    const ComplexMatrix gamma = compile_circuit(circuit).matrix();
    const ComplexVector out = gamma * psi.vector();
    const ComplexMatrix& d = triple.dirac_matrix();
    const double identity_gap = max_abs_diff(final_state.value_matrix(), outer(out, out) + gamma * d * gamma.adjoint() - d);

    Json& r = report.results();
    r["qubits"] = circuit.qubits();
    r["gate_count"] = circuit.gates().size();
    r["readout"] = readout_json(doc.readout);
    r["gauge_probability"] = gauge_p;
    r["complement_probability"] = 1.0 - gauge_p;
    r["oracle_probability"] = oracle_p;
    r["gap"] = std::abs(gauge_p - oracle_p);
    r["final_state"] = gauge_state_to_json(final_state);

    report.add_check("gauge readout vs state-vector oracle", std::abs(gauge_p - oracle_p), options.tolerance);
    report.add_check("final value vs Gamma form", identity_gap, kTolerance);
    return report;
}

RunReport cmd_dj(const DjOptions& options) {
    RunReport report("dj");
    const auto oracle = [&]() -> OracleSpec {
        if (!options.oracle_file.empty()) {
            if (!options.oracle.empty()) throw ParseError("--oracle and --oracle-file are mutually exclusive");
            OracleSpec o = oracle_from_json(load_input(options.oracle_file, report), "file");
            if (options.n && *options.n != o.n()) {
                throw ValidationError("--n " + std::to_string(*options.n) + " does not match the oracle file (n = " +
                                      std::to_string(o.n()) + ")");
            }
            return o;
        }
        if (options.oracle.empty()) throw ParseError("dj: one of --oracle or --oracle-file is required");
        if (!options.n) throw ParseError("dj: --n is required with --oracle");
        report.add_input("oracle=" + options.oracle + " n=" + std::to_string(*options.n));
        if (options.oracle == "random-balanced") {
            report.add_input("seed=" + std::to_string(options.seed));
            Rng rng(options.seed);
            return OracleSpec::from_table(*options.n, random_balanced_table(*options.n, rng), "random-balanced");
        }
        const auto builtin = parse_builtin_oracle(options.oracle);
        if (!builtin) {
            throw ParseError("--oracle: unknown oracle \"" + options.oracle +
                             "\"; expected constant0, constant1, balanced-parity, balanced-firstbit or random-balanced");
        }
        return OracleSpec::builtin(*builtin, *options.n);
    }();

    const std::size_t n = oracle.n();
    const std::size_t dim = std::size_t{2} << n;
    const std::vector<std::string> diracs = options.diracs.empty() ? std::vector<std::string>{"standard"} : options.diracs;

    std::vector<double> probabilities;
    std::optional<DeutschJozsaResult> primary;
    for (const auto& spec : diracs) {
        auto result = deutsch_jozsa(oracle, resolve_dirac(spec, dim, report));
        probabilities.push_back(result.probability);
        if (!primary) primary.emplace(std::move(result));
    }

    double amplitude = 0.0;
    for (const auto v : oracle.table()) amplitude += v ? -1.0 : 1.0;
    amplitude /= static_cast<double>(oracle.table().size());
    const double expected = amplitude * amplitude;
    const double oracle_p =
        statevector_oracle(deutsch_jozsa_circuit(oracle), deutsch_jozsa_initial_state(n), deutsch_jozsa_readout(n));

    Json& r = report.results();
    r["n"] = n;
    r["oracle"] = oracle.label();
    r["probability"] = primary->probability;
    r["verdict"] = std::string(verdict_name(primary->verdict));
    r["gauge_transform_count"] = primary->gauge_transform_count;
    r["oracle_class"] = std::string(oracle_class_name(primary->oracle_class));
    r["expected_probability"] = expected;
    r["statevector_probability"] = oracle_p;
    if (diracs.size() > 1) {
        Json per = Json::array();
        for (std::size_t i = 0; i < diracs.size(); ++i) per.push_back(Json{{"dirac", diracs[i]}, {"probability", probabilities[i]}});
        r["dirac_runs"] = std::move(per);
    }

    report.add_check("probability vs (sum (-1)^f / 2^n)^2", std::abs(primary->probability - expected), kDjTolerance);
    report.add_check("gauge readout vs state-vector oracle", std::abs(primary->probability - oracle_p), kOracleTolerance);
    if (primary->oracle_class != OracleClass::kNeither) {
        const bool constant = primary->oracle_class == OracleClass::kConstant;
        report.add_boolean_check("verdict", (primary->verdict == DjVerdict::kConstant) == constant);
    }
    for (std::size_t i = 1; i < probabilities.size(); ++i) {
        report.add_check("dirac independence (" + diracs[i] + ")", std::abs(probabilities[i] - probabilities[0]), 0.0);
    }
    return report;
}

RunReport cmd_evolve(const EvolveOptions& options) {
    RunReport report("evolve");
    const Json hj = load_input(options.hamiltonian_file, report);
    const Json& mj = hj.is_object() && hj.contains("matrix") ? hj["matrix"] : hj;
    const Hamiltonian h{HermitianOperator(matrix_from_json(mj, "hamiltonian"))};
    if (!std::isfinite(options.t)) throw ValidationError("--t must be finite");
    const std::size_t steps = options.steps.value_or(default_ode_steps(options.t));
    if (steps == 0) throw ValidationError("--steps must be positive");
    report.add_input("t=" + fmt_double(options.t) + " steps=" + std::to_string(steps));

    const SpectralTriple triple = resolve_dirac(options.dirac, h.dim(), report);
    const UnitVector psi = resolve_state(options.state_bits, options.state_file, h.dim(), report);
    const GaugeState initial = encode_state(psi, triple);

    const GaugeState closed = evolve_closed(initial, h, options.t);
    const HermitianOperator rk4 = evolve_ode(initial, h, options.t, steps);
    const double gap = max_abs_diff(closed.value_matrix(), rk4.matrix());
    const GaugeState halves = evolve_closed(evolve_closed(initial, h, options.t / 2), h, options.t / 2);
    const double group_gap = max_abs_diff(halves.value_matrix(), closed.value_matrix());

    Json& r = report.results();
    r["dim"] = h.dim();
    r["t"] = options.t;
    r["steps"] = steps;
    r["initial_value"] = matrix_to_json(initial.value_matrix());
    r["closed_form"] = matrix_to_json(closed.value_matrix());
    r["rk4"] = matrix_to_json(rk4.matrix());
    r["gap"] = gap;
    r["group_law_gap"] = group_gap;
    r["final_state"] = gauge_state_to_json(closed);

    report.add_check("rk4 vs closed form", gap, options.tolerance);
    report.add_check("group law at t/2", group_gap, kGroupLawTolerance);
    return report;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gauge quantum computation simulator", "gaugeqc"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Include wall time in the JSON report");

    VerifyPaperOptions verify;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute the single-qubit example matrices");
    verify_cmd->add_option("--perturb", verify.perturbation)->group("");  // test hook

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Run a circuit file as a gauge computation");
    run_cmd->add_option("circuit", run.circuit_file, "Circuit JSON file")->required();
    run_cmd->add_option("--state", run.state_bits, "Initial basis state as a bit string, qubit 0 first");
    run_cmd->add_option("--state-file", run.state_file, "Initial state as a JSON vector");
    run_cmd->add_option("--dirac", run.dirac, "standard | standard:n | zsum | random:SEED | triple JSON file");
    run_cmd->add_option("--tolerance", run.tolerance, "Gauge/oracle agreement tolerance");

    DjOptions dj;
    std::size_t dj_n = 0;
    auto* dj_cmd = app.add_subcommand("dj", "Deutsch-Jozsa in gauge form");
    auto* n_opt = dj_cmd->add_option("--n", dj_n, "Input bit width");
    dj_cmd->add_option("--oracle", dj.oracle,
                       "constant0 | constant1 | balanced-parity | balanced-firstbit | random-balanced");
    dj_cmd->add_option("--oracle-file", dj.oracle_file, "Oracle JSON file");
    dj_cmd->add_option("--dirac", dj.diracs, "Dirac operator(s); repeat to compare")->take_all();
    dj_cmd->add_option("--seed", dj.seed, "Seed for random-balanced");

    EvolveOptions evolve;
    std::size_t evolve_steps = 0;
    auto* evolve_cmd = app.add_subcommand("evolve", "Closed-form vs RK4 gauge-state dynamics");
    evolve_cmd->add_option("--hamiltonian", evolve.hamiltonian_file, "Hamiltonian matrix JSON file")->required();
    evolve_cmd->add_option("--t", evolve.t, "Evolution time");
    auto* steps_opt = evolve_cmd->add_option("--steps", evolve_steps, "RK4 steps (default 1000 max(1, |t|))");
    evolve_cmd->add_option("--state", evolve.state_bits, "Initial basis state as a bit string");
    evolve_cmd->add_option("--state-file", evolve.state_file, "Initial state as a JSON vector");
    evolve_cmd->add_option("--dirac", evolve.dirac, "standard | standard:n | zsum | random:SEED | triple JSON file");
    evolve_cmd->add_option("--tolerance", evolve.tolerance, "RK4 vs closed-form tolerance");

    std::string command = "gaugeqc";
    const auto emit_error = [&](int code, const std::string& message) {
        err << "error: " << message << "\n";
        Json j;
        j["command"] = command;
        j["status"] = "error";
        j["exit_code"] = code;
        j["message"] = message;
        out << dump_deterministic(j);
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return emit_error(kInputError, e.what());
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        std::optional<RunReport> report;
        if (verify_cmd->parsed()) {
            command = "verify-paper";
            report.emplace(cmd_verify_paper(verify));
        } else if (run_cmd->parsed()) {
            command = "run";
            report.emplace(cmd_run(run));
        } else if (dj_cmd->parsed()) {
            command = "dj";
            if (n_opt->count() > 0) dj.n = dj_n;
            report.emplace(cmd_dj(dj));
        } else {
            command = "evolve";
            if (steps_opt->count() > 0) evolve.steps = evolve_steps;
            report.emplace(cmd_evolve(evolve));
        }
        report->set_wall_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        out << dump_deterministic(report->to_json(timing));
        err << report->summary();
        return report->passed() ? kOk : kCheckFailed;
    } catch (const ParseError& e) {
        return emit_error(kInputError, e.what());
    } catch (const ValidationError& e) {
        return emit_error(kValidationError, e.what());
    } catch (const ShapeError& e) {
        return emit_error(kValidationError, e.what());
    } catch (const UnverifiableError& e) {
        return emit_error(kValidationError, e.what());
    } catch (const CorruptionError& e) {
        return emit_error(kCheckFailed, e.what());
    } catch (const std::exception& e) {
        return emit_error(kCheckFailed, e.what());
    }
}

}  // namespace gqc::cli
