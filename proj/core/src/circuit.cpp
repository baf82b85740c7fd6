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

#include "gaugeqc/circuit.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gaugeqc/errors.hpp"

namespace gqc {

namespace {

struct GateInfo {
    NamedGate gate;
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<GateInfo, 9> kGates{{
    {NamedGate::kX, "X", 1},
    {NamedGate::kY, "Y", 1},
    {NamedGate::kZ, "Z", 1},
    {NamedGate::kH, "H", 1},
    {NamedGate::kS, "S", 1},
    {NamedGate::kT, "T", 1},
    {NamedGate::kCNOT, "CNOT", 2},
    {NamedGate::kCZ, "CZ", 2},
    {NamedGate::kSWAP, "SWAP", 2},
}};

const GateInfo& info(NamedGate gate) {
    for (const auto& g : kGates) {
        if (g.gate == gate) return g;
    }
    throw ValidationError("unknown gate enumerator");
}

void check_targets(const std::vector<std::size_t>& targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw ValidationError("gate: duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
}

}  // namespace

std::string_view gate_name(NamedGate gate) { return info(gate).name; }

std::optional<NamedGate> parse_gate_name(std::string_view name) {
    for (const auto& g : kGates) {
        if (g.name == name) return g.gate;
    }
    return std::nullopt;
}

std::string supported_gate_names() {
    std::string out;
    for (const auto& g : kGates) {
        if (!out.empty()) out += ", ";
        out += g.name;
    }
    return out;
}

std::size_t gate_arity(NamedGate gate) { return info(gate).arity; }

ComplexMatrix gate_matrix(NamedGate gate) {
    const Complex i(0.0, 1.0);
    switch (gate) {
        case NamedGate::kX:
            return pauli_x();
        case NamedGate::kY:
            return pauli_y();
        case NamedGate::kZ:
            return pauli_z();
        case NamedGate::kH: {
            ComplexMatrix m(2, 2);
            m << 1.0, 1.0, 1.0, -1.0;
            return m / std::numbers::sqrt2;
        }
        case NamedGate::kS: {
            ComplexMatrix m(2, 2);
            m << 1.0, 0.0, 0.0, i;
            return m;
        }
        case NamedGate::kT: {
            ComplexMatrix m(2, 2);
            m << 1.0, 0.0, 0.0, std::exp(i * (std::numbers::pi / 4.0));
            return m;
        }
        case NamedGate::kCNOT: {
            ComplexMatrix m = ComplexMatrix::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
            return m;
        }
        case NamedGate::kCZ: {
            ComplexMatrix m = identity_matrix(4);
            m(3, 3) = -1.0;
            return m;
        }
        case NamedGate::kSWAP: {
            ComplexMatrix m = ComplexMatrix::Zero(4, 4);
            m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
            return m;
        }
    }
    throw ValidationError("unknown gate enumerator");
}

GateSpec GateSpec::named(NamedGate gate, std::vector<std::size_t> targets) {
    if (targets.size() != gate_arity(gate)) {
        throw ValidationError("gate " + std::string(gate_name(gate)) + " takes " +
                              std::to_string(gate_arity(gate)) + " target(s), got " +
                              std::to_string(targets.size()));
    }
    check_targets(targets);
    return GateSpec(gate, std::move(targets));
}

GateSpec GateSpec::explicit_unitary(UnitaryOperator gate, std::vector<std::size_t> targets) {
    if (targets.empty() || targets.size() >= 8 * sizeof(std::size_t) ||
        gate.dim() != (std::size_t{1} << targets.size())) {
        throw ValidationError("explicit gate of dimension " + std::to_string(gate.dim()) +
                              " does not match " + std::to_string(targets.size()) + " target(s)");
    }
    check_targets(targets);
    return GateSpec(std::move(gate), std::move(targets));
}

ComplexMatrix GateSpec::matrix() const {
    if (const auto* g = std::get_if<NamedGate>(&kind_)) return gate_matrix(*g);
    return std::get<UnitaryOperator>(kind_).matrix();
}

UnitaryOperator GateSpec::unitary() const {
    if (const auto* g = std::get_if<NamedGate>(&kind_)) return UnitaryOperator(gate_matrix(*g));
    return std::get<UnitaryOperator>(kind_);
}

std::optional<NamedGate> GateSpec::name() const {
    if (const auto* g = std::get_if<NamedGate>(&kind_)) return *g;
    return std::nullopt;
}

QuantumCircuit::QuantumCircuit(std::size_t qubits) : qubits_(qubits) {
    if (qubits == 0) throw ValidationError("QuantumCircuit: need at least one qubit");
    if (qubits > 20) throw ValidationError("QuantumCircuit: too many qubits for dense simulation");
}

QuantumCircuit& QuantumCircuit::append(GateSpec gate) {
    for (const auto t : gate.targets()) {
        if (t >= qubits_) {
            throw ValidationError("QuantumCircuit: target " + std::to_string(t) + " out of range for " +
                                  std::to_string(qubits_) + " qubits");
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

QuantumCircuit& QuantumCircuit::append(NamedGate gate, std::vector<std::size_t> targets) {
    return append(GateSpec::named(gate, std::move(targets)));
}

ReadoutSpec::ReadoutSpec(std::vector<std::size_t> qubits, std::vector<int> bits)
    : qubits_(std::move(qubits)), bits_(std::move(bits)) {
    if (qubits_.size() != bits_.size()) {
        throw ValidationError("ReadoutSpec: qubits and bits have different lengths");
    }
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        if (bits_[i] != 0 && bits_[i] != 1) throw ValidationError("ReadoutSpec: bits must be 0 or 1");
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits_[i] == qubits_[j]) {
                throw ValidationError("ReadoutSpec: qubit " + std::to_string(qubits_[i]) + " listed twice");
            }
        }
    }
}

ReadoutSpec ReadoutSpec::first_qubit_one() { return ReadoutSpec({0}, {1}); }

UnitaryOperator compile_circuit(const QuantumCircuit& circuit) {
    UnitaryOperator total = UnitaryOperator::identity(circuit.dim());
    for (const auto& gate : circuit.gates()) {
        total = embed_gate(gate.unitary(), gate.targets(), circuit.qubits()) * total;
    }
    return total;
}

EventProjector projector_of(const ReadoutSpec& readout, std::size_t qubits) {
    std::vector<ComplexMatrix> factors(qubits, identity_matrix(2));
    for (std::size_t i = 0; i < readout.qubits().size(); ++i) {
        const std::size_t q = readout.qubits()[i];
        if (q >= qubits) {
            throw ValidationError("readout qubit " + std::to_string(q) + " out of range for " +
                                  std::to_string(qubits) + " qubits");
        }
        const ComplexVector b = basis_vector(2, static_cast<std::size_t>(readout.bits()[i]));
        factors[q] = outer(b, b);
    }
    return EventProjector(tensor_all(factors));
}

GaugeState run_gauge_computation(const QuantumCircuit& circuit, const UnitVector& psi0,
                                 const SpectralTriple& triple) {
    if (triple.dim() != circuit.dim()) {
        throw ShapeError("run_gauge_computation: circuit acts on dimension " + std::to_string(circuit.dim()) +
                         " but the triple has dimension " + std::to_string(triple.dim()));
    }
    GaugeState state = encode_state(psi0, triple);
    for (const auto& gate : circuit.gates()) {
        state = gauge_transform(state, embed_gate(gate.unitary(), gate.targets(), circuit.qubits()));
    }
    return state;
}

double gauge_readout(const GaugeState& state, const ReadoutSpec& readout) {
    return measure_probability(state, projector_of(readout, qubits_for_dim(state.dim())));
}

std::size_t qubits_for_dim(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim || n == 0) {
        throw ShapeError("dimension " + std::to_string(dim) + " is not 2^n for a positive n");
    }
    return n;
}

}  // namespace gqc
