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

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gaugeqc/circuit.hpp"
#include "gaugeqc/deutsch_jozsa.hpp"
#include "gaugeqc/gauge_state.hpp"
#include "gaugeqc/linalg.hpp"
#include "gaugeqc/spectral_triple.hpp"

// JSON encodings. A complex number is [re, im]; a plain number is read as a
// real value. Matrices are row-major nested arrays, vectors flat arrays.
// Structural problems raise ParseError naming the offending field; values
// that parse but break a type invariant raise ValidationError.

namespace gqc {

using Json = nlohmann::ordered_json;

/// Parses JSON text. Syntax errors become ParseError("<source>:<line>:<col>: ...").
Json parse_json_text(std::string_view text, std::string_view source);
Json load_json_file(const std::filesystem::path& path);

Json complex_to_json(Complex z);
Json matrix_to_json(const ComplexMatrix& m);
Json vector_to_json(const ComplexVector& v);

Complex complex_from_json(const Json& j, const std::string& field);
ComplexMatrix matrix_from_json(const Json& j, const std::string& field);
ComplexVector vector_from_json(const Json& j, const std::string& field);

/// {"dim": N, "dirac": matrix}
Json triple_to_json(const SpectralTriple& triple);
SpectralTriple triple_from_json(const Json& j);

/// {"value": matrix, "base_state": vector, "cum_unitary": matrix}
Json gauge_state_to_json(const GaugeState& state);
GaugeState gauge_state_from_json(const Json& j, const SpectralTriple& triple);

struct CircuitDocument {
    QuantumCircuit circuit;
    /// Pi_1 (qubit 0 reads 1) when the file has no "readout".
    ReadoutSpec readout;
};

/// {"qubits": n, "gates": [{"name": "H", "targets": [0]}, {"matrix": ..., "targets": [2]}],
///  "readout": {"qubits": [0], "bits": [1]}}
CircuitDocument circuit_from_json(const Json& j);
Json circuit_to_json(const QuantumCircuit& circuit, const ReadoutSpec& readout);

/// {"n": k, "table": [0, 1, ...]}
OracleSpec oracle_from_json(const Json& j, std::string label = "file");

/// Serializes with a fixed layout: insertion-ordered keys, two-space indent,
/// doubles printed with 17 significant digits.
std::string dump_deterministic(const Json& j);

}  // namespace gqc
