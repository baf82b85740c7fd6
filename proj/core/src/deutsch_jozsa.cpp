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

#include "gaugeqc/deutsch_jozsa.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "gaugeqc/errors.hpp"

namespace gqc {

namespace {

constexpr std::array<std::pair<BuiltinOracle, std::string_view>, 4> kBuiltins{{
    {BuiltinOracle::kConstant0, "constant0"},
    {BuiltinOracle::kConstant1, "constant1"},
    {BuiltinOracle::kBalancedParity, "balanced-parity"},
    {BuiltinOracle::kBalancedFirstBit, "balanced-firstbit"},
}};

std::vector<std::size_t> all_qubits(std::size_t n) {
    std::vector<std::size_t> q(n);
    std::iota(q.begin(), q.end(), std::size_t{0});
    return q;
}

}  // namespace

std::optional<BuiltinOracle> parse_builtin_oracle(std::string_view name) {
    for (const auto& [oracle, label] : kBuiltins) {
        if (label == name) return oracle;
    }
    return std::nullopt;
}

std::string_view builtin_oracle_name(BuiltinOracle oracle) {
    for (const auto& [o, label] : kBuiltins) {
        if (o == oracle) return label;
    }
    return "unknown";
}

std::string_view verdict_name(DjVerdict verdict) {
    switch (verdict) {
        case DjVerdict::kConstant:
            return "constant";
        case DjVerdict::kBalanced:
            return "balanced";
        case DjVerdict::kIndeterminateInput:
            return "indeterminate-input";
    }
    return "unknown";
}

std::string_view oracle_class_name(OracleClass c) {
    switch (c) {
        case OracleClass::kConstant:
            return "constant";
        case OracleClass::kBalanced:
            return "balanced";
        case OracleClass::kNeither:
            return "neither";
    }
    return "unknown";
}

OracleSpec OracleSpec::from_table(std::size_t n, std::vector<std::uint8_t> table, std::string label) {
    if (n == 0 || n > 16) throw ValidationError("oracle: input width must be between 1 and 16 bits");
    if (table.size() != (std::size_t{1} << n)) {
        throw ValidationError("oracle: table has " + std::to_string(table.size()) + " entries, expected 2^" +
                              std::to_string(n) + " = " + std::to_string(std::size_t{1} << n));
    }
    for (const auto v : table) {
        if (v > 1) throw ValidationError("oracle: table entries must be 0 or 1");
    }
    return OracleSpec(n, std::move(table), std::move(label));
}

OracleSpec OracleSpec::builtin(BuiltinOracle oracle, std::size_t n) {
    if (n == 0 || n > 16) throw ValidationError("oracle: input width must be between 1 and 16 bits");
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::size_t x = 0; x < table.size(); ++x) {
        switch (oracle) {
            case BuiltinOracle::kConstant0:
                table[x] = 0;
                break;
            case BuiltinOracle::kConstant1:
                table[x] = 1;
                break;
            case BuiltinOracle::kBalancedParity:
                table[x] = static_cast<std::uint8_t>(std::popcount(x) & 1);
                break;
            case BuiltinOracle::kBalancedFirstBit:
                table[x] = static_cast<std::uint8_t>((x >> (n - 1)) & 1U);
                break;
        }
    }
    return OracleSpec(n, std::move(table), std::string(builtin_oracle_name(oracle)));
}

OracleClass OracleSpec::classify() const {
    const auto ones = static_cast<std::size_t>(std::count(table_.begin(), table_.end(), std::uint8_t{1}));
    if (ones == 0 || ones == table_.size()) return OracleClass::kConstant;
    if (2 * ones == table_.size()) return OracleClass::kBalanced;
    return OracleClass::kNeither;
}

UnitaryOperator build_oracle_unitary(const OracleSpec& oracle) {
    std::vector<std::size_t> images(std::size_t{2} << oracle.n());
    for (std::size_t x = 0; x < oracle.table().size(); ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            images[(x << 1) | y] = (x << 1) | (y ^ static_cast<std::size_t>(oracle(x)));
        }
    }
    return UnitaryOperator::permutation(images);
}

UnitaryOperator hadamard_layer(std::size_t k) {
    if (k == 0) throw ValidationError("hadamard_layer: need at least one qubit");
    const UnitaryOperator h(gate_matrix(NamedGate::kH));
    UnitaryOperator layer = h;
    for (std::size_t i = 1; i < k; ++i) layer = tensor(layer, h);
    return layer;
}

QuantumCircuit deutsch_jozsa_circuit(const OracleSpec& oracle) {
    const std::size_t n = oracle.n();
    QuantumCircuit circuit(n + 1);
    circuit.append(GateSpec::explicit_unitary(hadamard_layer(n + 1), all_qubits(n + 1)));
    circuit.append(GateSpec::explicit_unitary(build_oracle_unitary(oracle), all_qubits(n + 1)));
    circuit.append(GateSpec::explicit_unitary(tensor(hadamard_layer(n), UnitaryOperator::identity(2)),
                                              all_qubits(n + 1)));
    return circuit;
}

UnitVector deutsch_jozsa_initial_state(std::size_t n) {
    return UnitVector(basis_vector(std::size_t{2} << n, 1));
}

ReadoutSpec deutsch_jozsa_readout(std::size_t n) {
    return ReadoutSpec(all_qubits(n), std::vector<int>(n, 0));
}

DeutschJozsaResult deutsch_jozsa(const OracleSpec& oracle, const SpectralTriple& triple) {
    const std::size_t n = oracle.n();
    if (triple.dim() != (std::size_t{2} << n)) {
        throw ShapeError("deutsch_jozsa: an oracle on " + std::to_string(n) +
                         " bits needs a triple of dimension " + std::to_string(std::size_t{2} << n) +
                         ", got " + std::to_string(triple.dim()));
    }
    const QuantumCircuit circuit = deutsch_jozsa_circuit(oracle);
    GaugeState final_state = run_gauge_computation(circuit, deutsch_jozsa_initial_state(n), triple);
    const double p = gauge_readout(final_state, deutsch_jozsa_readout(n));

    const OracleClass cls = oracle.classify();
    DjVerdict verdict = DjVerdict::kIndeterminateInput;
    if (cls != OracleClass::kNeither) verdict = p > 0.5 ? DjVerdict::kConstant : DjVerdict::kBalanced;
    return DeutschJozsaResult{p, verdict, cls, circuit.gates().size(), std::move(final_state)};
}

DeutschJozsaResult deutsch_jozsa(const OracleSpec& oracle) {
    return deutsch_jozsa(oracle, standard_qubit_triple(oracle.n() + 1));
}

}  // namespace gqc
