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

// Independent reference path for the circuit model. Nothing here forms a
// full-register operator, so a bug in operator embedding or composition
// cannot cancel between this path and the gauge path.

#include <string>

#include "gaugeqc/circuit.hpp"
#include "gaugeqc/errors.hpp"

namespace gqc {

namespace {

std::size_t bit_mask(std::size_t qubit, std::size_t n) { return std::size_t{1} << (n - 1 - qubit); }

void apply_local(ComplexVector& amps, const ComplexMatrix& gate, const std::vector<std::size_t>& targets,
                 std::size_t n) {
    const std::size_t k = targets.size();
    const std::size_t sub_dim = std::size_t{1} << k;
    std::size_t target_mask = 0;
    for (const auto t : targets) target_mask |= bit_mask(t, n);

    std::vector<std::size_t> offsets(sub_dim, 0);
    for (std::size_t s = 0; s < sub_dim; ++s) {
        for (std::size_t j = 0; j < k; ++j) {
            if ((s >> (k - 1 - j)) & 1U) offsets[s] |= bit_mask(targets[j], n);
        }
    }

    ComplexVector local(static_cast<Eigen::Index>(sub_dim));
    const auto dim = static_cast<std::size_t>(amps.size());
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & target_mask) continue;
        for (std::size_t s = 0; s < sub_dim; ++s) {
            local(static_cast<Eigen::Index>(s)) = amps(static_cast<Eigen::Index>(base | offsets[s]));
        }
        const ComplexVector updated = gate * local;
        for (std::size_t s = 0; s < sub_dim; ++s) {
            amps(static_cast<Eigen::Index>(base | offsets[s])) = updated(static_cast<Eigen::Index>(s));
        }
    }
}

}  // namespace

ComplexVector simulate_statevector(const QuantumCircuit& circuit, const UnitVector& psi0) {
    if (psi0.dim() != circuit.dim()) {
        throw ShapeError("statevector: state has dimension " + std::to_string(psi0.dim()) +
                         " but the circuit acts on dimension " + std::to_string(circuit.dim()));
    }
    ComplexVector amps = psi0.vector();
    for (const auto& gate : circuit.gates()) {
        apply_local(amps, gate.matrix(), gate.targets(), circuit.qubits());
    }
    return amps;
}

double statevector_oracle(const QuantumCircuit& circuit, const UnitVector& psi0, const ReadoutSpec& readout) {
    const std::size_t n = circuit.qubits();
    std::size_t mask = 0;
    std::size_t want = 0;
    for (std::size_t i = 0; i < readout.qubits().size(); ++i) {
        const std::size_t q = readout.qubits()[i];
        if (q >= n) {
            throw ValidationError("readout qubit " + std::to_string(q) + " out of range for " +
                                  std::to_string(n) + " qubits");
        }
        mask |= bit_mask(q, n);
        if (readout.bits()[i] == 1) want |= bit_mask(q, n);
    }
    const ComplexVector amps = simulate_statevector(circuit, psi0);
    double p = 0.0;
    for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
        if ((static_cast<std::size_t>(idx) & mask) == want) p += std::norm(amps(idx));
    }
    return p;
}

}  // namespace gqc
