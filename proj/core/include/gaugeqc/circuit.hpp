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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gaugeqc/gauge_state.hpp"
#include "gaugeqc/linalg.hpp"
#include "gaugeqc/spectral_triple.hpp"

namespace gqc {

enum class NamedGate { kX, kY, kZ, kH, kS, kT, kCNOT, kCZ, kSWAP };

std::string_view gate_name(NamedGate gate);
std::optional<NamedGate> parse_gate_name(std::string_view name);
/// "X, Y, Z, H, S, T, CNOT, CZ, SWAP"
std::string supported_gate_names();
std::size_t gate_arity(NamedGate gate);

/// Standard matrices. For two-qubit gates the first target is the more
/// significant factor; for CNOT it is the control.
ComplexMatrix gate_matrix(NamedGate gate);

/// A gate and the qubits it acts on.
class GateSpec {
   public:
    /// Throws ValidationError when the target count does not match the arity.
    static GateSpec named(NamedGate gate, std::vector<std::size_t> targets);
    /// Explicit 2^k x 2^k unitary on k distinct targets.
    static GateSpec explicit_unitary(UnitaryOperator gate, std::vector<std::size_t> targets);

    ComplexMatrix matrix() const;
    UnitaryOperator unitary() const;
    const std::vector<std::size_t>& targets() const noexcept { return targets_; }
    std::optional<NamedGate> name() const;

   private:
    GateSpec(std::variant<NamedGate, UnitaryOperator> kind, std::vector<std::size_t> targets)
        : kind_(std::move(kind)), targets_(std::move(targets)) {}

    std::variant<NamedGate, UnitaryOperator> kind_;
    std::vector<std::size_t> targets_;
};

/// Gates in application order: gates()[0] acts first, so the circuit
/// unitary is U_N ... U_1.
class QuantumCircuit {
   public:
    explicit QuantumCircuit(std::size_t qubits);

    /// Throws ValidationError for targets >= qubits().
    QuantumCircuit& append(GateSpec gate);
    QuantumCircuit& append(NamedGate gate, std::vector<std::size_t> targets);

    std::size_t qubits() const noexcept { return qubits_; }
    std::size_t dim() const noexcept { return std::size_t{1} << qubits_; }
    const std::vector<GateSpec>& gates() const noexcept { return gates_; }

   private:
    std::size_t qubits_;
    std::vector<GateSpec> gates_;
};

/// The event "qubit qubits[i] reads bits[i]" for every i.
class ReadoutSpec {
   public:
    ReadoutSpec() = default;
    /// Throws ValidationError for unequal lengths, repeated qubits or bits
    /// other than 0/1.
    ReadoutSpec(std::vector<std::size_t> qubits, std::vector<int> bits);

    /// Pi_1: qubit 0 reads 1.
    static ReadoutSpec first_qubit_one();

    const std::vector<std::size_t>& qubits() const noexcept { return qubits_; }
    const std::vector<int>& bits() const noexcept { return bits_; }

   private:
    std::vector<std::size_t> qubits_;
    std::vector<int> bits_;
};

/// U_N ... U_1 on 2^n dimensions.
UnitaryOperator compile_circuit(const QuantumCircuit& circuit);

/// |b><b| on each listed qubit, identity elsewhere.
EventProjector projector_of(const ReadoutSpec& readout, std::size_t qubits);

/// Encodes psi0 and applies one gauge transform per gate, in order.
GaugeState run_gauge_computation(const QuantumCircuit& circuit, const UnitVector& psi0,
                                 const SpectralTriple& triple);

/// measure_probability(state, projector_of(readout)).
double gauge_readout(const GaugeState& state, const ReadoutSpec& readout);

/// Reference simulator: applies each gate directly to the amplitudes of
/// psi0 by gathering the target-qubit sub-indices, without forming any
/// 2^n x 2^n matrix.
ComplexVector simulate_statevector(const QuantumCircuit& circuit, const UnitVector& psi0);

/// ||Pi psi_final||^2 from simulate_statevector.
double statevector_oracle(const QuantumCircuit& circuit, const UnitVector& psi0,
                          const ReadoutSpec& readout);

/// Number of qubits for a 2^n-dimensional space; ShapeError otherwise.
std::size_t qubits_for_dim(std::size_t dim);

}  // namespace gqc
