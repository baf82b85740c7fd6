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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaugeqc/circuit.hpp"
#include "gaugeqc/gauge_state.hpp"
#include "gaugeqc/spectral_triple.hpp"

namespace gqc {

enum class BuiltinOracle { kConstant0, kConstant1, kBalancedParity, kBalancedFirstBit };
enum class OracleClass { kConstant, kBalanced, kNeither };
enum class DjVerdict { kConstant, kBalanced, kIndeterminateInput };

/// "constant0", "constant1", "balanced-parity", "balanced-firstbit"
std::optional<BuiltinOracle> parse_builtin_oracle(std::string_view name);
std::string_view builtin_oracle_name(BuiltinOracle oracle);
std::string_view verdict_name(DjVerdict verdict);
std::string_view oracle_class_name(OracleClass c);

/// Truth table of f: {0,1}^n -> {0,1}. Entry x is f at the bit string whose
/// most significant bit is x_0.
class OracleSpec {
   public:
    /// Throws ValidationError when n == 0, the table length is not 2^n, or an
    /// entry is not 0/1.
    static OracleSpec from_table(std::size_t n, std::vector<std::uint8_t> table,
                                 std::string label = "table");
    static OracleSpec builtin(BuiltinOracle oracle, std::size_t n);

    std::size_t n() const noexcept { return n_; }
    const std::vector<std::uint8_t>& table() const noexcept { return table_; }
    const std::string& label() const noexcept { return label_; }
    int operator()(std::size_t x) const { return table_.at(x); }

    /// Counts ones: none or all -> constant, exactly half -> balanced.
    OracleClass classify() const;

   private:
    OracleSpec(std::size_t n, std::vector<std::uint8_t> table, std::string label)
        : n_(n), table_(std::move(table)), label_(std::move(label)) {}

    std::size_t n_;
    std::vector<std::uint8_t> table_;
    std::string label_;
};

/// U_f |x, y> = |x, y xor f(x)>, x on the first n qubits.
UnitaryOperator build_oracle_unitary(const OracleSpec& oracle);

/// H^{(x) k}
UnitaryOperator hadamard_layer(std::size_t k);

/// Three whole-register stages: H^{(x)(n+1)}, then U_f, then H^{(x)n} (x) I.
QuantumCircuit deutsch_jozsa_circuit(const OracleSpec& oracle);

/// |0>^{(x)n} (x) |1>
UnitVector deutsch_jozsa_initial_state(std::size_t n);

/// All of the first n qubits read 0.
ReadoutSpec deutsch_jozsa_readout(std::size_t n);

struct DeutschJozsaResult {
    double probability;
    DjVerdict verdict;
    OracleClass oracle_class;
    std::size_t gauge_transform_count;
    GaugeState final_state;
};

/// Runs the gauge computation on `triple` (dimension 2^(n+1)) and reads the
/// probability that the first n qubits are all 0. The verdict is constant
/// iff that probability exceeds 0.5; tables that are neither constant nor
/// balanced get kIndeterminateInput.
DeutschJozsaResult deutsch_jozsa(const OracleSpec& oracle, const SpectralTriple& triple);

/// Same, on standard_qubit_triple(n + 1).
DeutschJozsaResult deutsch_jozsa(const OracleSpec& oracle);

}  // namespace gqc
