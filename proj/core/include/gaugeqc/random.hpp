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
#include <random>
#include <vector>

#include "gaugeqc/circuit.hpp"
#include "gaugeqc/gauge_state.hpp"
#include "gaugeqc/linalg.hpp"
#include "gaugeqc/spectral_triple.hpp"

namespace gqc {

using Rng = std::mt19937_64;

/// Haar-distributed unitary (QR of a complex Gaussian matrix, R-phases fixed).
UnitaryOperator random_unitary(std::size_t dim, Rng& rng);

/// Hermitian matrix with Gaussian entries, rescaled so ||H||_max == max_entry.
HermitianOperator random_hermitian(std::size_t dim, Rng& rng, double max_entry = 1.0);

UnitVector random_unit_vector(std::size_t dim, Rng& rng);

/// Random Hermitian Dirac operator; resampled until it is not scalar.
SpectralTriple random_triple(std::size_t dim, Rng& rng);

/// depth gates on n qubits, a mix of named gates and random 1- or 2-qubit
/// unitaries on random targets.
QuantumCircuit random_circuit(std::size_t n, std::size_t depth, Rng& rng);

/// Uniformly random table with exactly 2^(n-1) ones.
std::vector<std::uint8_t> random_balanced_table(std::size_t n, Rng& rng);

}  // namespace gqc
