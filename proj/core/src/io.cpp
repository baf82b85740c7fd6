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

#include "gaugeqc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gaugeqc/errors.hpp"

namespace gqc {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ParseError(field + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(field, "missing required field \"" + key + "\"");
    return *it;
}

std::size_t index_from_json(const Json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(field, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<std::size_t> indices_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "expected an array of qubit indices");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(index_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<int> bits_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "expected an array of bits");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_number_integer()) fail(at, "expected 0 or 1");
        const auto b = j[i].get<long long>();
        if (b != 0 && b != 1) fail(at, "expected 0 or 1");
        out.push_back(static_cast<int>(b));
    }
    return out;
}

ReadoutSpec readout_from_json(const Json& j, const std::string& field) {
    return ReadoutSpec(indices_from_json(member(j, "qubits", field), field + ".qubits"),
                       bits_from_json(member(j, "bits", field), field + ".bits"));
}

void write_json(std::ostringstream& out, const Json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out << ",\n";
                first = false;
                out << pad << Json(key).dump() << ": ";
                write_json(out, value, depth + 1);
            }
            out << "\n" << close_pad << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out << "[]";
                return;
            }
            // Scalars and arrays of scalars stay on one line, so matrix rows print inline.
            const auto scalar = [](const Json& e) { return !e.is_structured(); };
            const bool flat = std::all_of(j.begin(), j.end(), [&](const Json& e) {
                return scalar(e) || (e.is_array() && std::all_of(e.begin(), e.end(), scalar));
            });
            if (flat) {
                out << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out << ", ";
                    write_json(out, j[i], depth + 1);
                }
                out << "]";
                return;
            }
            out << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ",\n";
                out << pad;
                write_json(out, j[i], depth + 1);
            }
            out << "\n" << close_pad << "]";
            return;
        }
        case Json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
            out << buf;
            return;
        }
        default:
            out << j.dump();
    }
}

}  // namespace

Json parse_json_text(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + e.what());
    }
}

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path.string());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_to_json(const ComplexVector& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(complex_to_json(z));
    return out;
}

Complex complex_from_json(const Json& j, const std::string& field) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    fail(field, "expected a number or a [re, im] pair");
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) fail(field, "expected a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) fail(field + "[0]", "expected a non-empty row array");
    const std::size_t cols = j[0].size();
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_field = field + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols) {
            fail(row_field, "expected a row of " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_from_json(j[r][c], row_field + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

ComplexVector vector_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) fail(field, "expected a non-empty array");
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], field + "[" + std::to_string(i) + "]");
    }
    return v;
}

Json triple_to_json(const SpectralTriple& triple) {
    Json j;
    j["dim"] = triple.dim();
    j["dirac"] = matrix_to_json(triple.dirac_matrix());
    return j;
}

SpectralTriple triple_from_json(const Json& j) {
    const std::size_t dim = index_from_json(member(j, "dim", "triple"), "triple.dim");
    ComplexMatrix d = matrix_from_json(member(j, "dirac", "triple"), "triple.dirac");
    if (static_cast<std::size_t>(d.rows()) != dim || static_cast<std::size_t>(d.cols()) != dim) {
        throw ShapeError("triple.dirac: expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                         ", got " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
    }
    return SpectralTriple(HermitianOperator(std::move(d)));
}

Json gauge_state_to_json(const GaugeState& state) {
    Json j;
    j["value"] = matrix_to_json(state.value_matrix());
    j["base_state"] = vector_to_json(state.base_state().vector());
    j["cum_unitary"] = matrix_to_json(state.cumulative_unitary().matrix());
    return j;
}

GaugeState gauge_state_from_json(const Json& j, const SpectralTriple& triple) {
    return GaugeState::from_parts(triple, matrix_from_json(member(j, "value", "state"), "state.value"),
                                  vector_from_json(member(j, "base_state", "state"), "state.base_state"),
                                  matrix_from_json(member(j, "cum_unitary", "state"), "state.cum_unitary"));
}

CircuitDocument circuit_from_json(const Json& j) {
    const std::size_t n = index_from_json(member(j, "qubits", "circuit"), "circuit.qubits");
    if (n == 0) fail("circuit.qubits", "expected at least one qubit");
    QuantumCircuit circuit(n);
    const Json& gates = member(j, "gates", "circuit");
    if (!gates.is_array()) fail("circuit.gates", "expected an array");
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const std::string field = "circuit.gates[" + std::to_string(i) + "]";
        const Json& g = gates[i];
        auto targets = indices_from_json(member(g, "targets", field), field + ".targets");
        const bool has_name = g.contains("name");
        const bool has_matrix = g.contains("matrix");
        if (has_name == has_matrix) fail(field, "expected exactly one of \"name\" or \"matrix\"");
        if (has_name) {
            if (!g["name"].is_string()) fail(field + ".name", "expected a string");
            const auto name = g["name"].get<std::string>();
            const auto gate = parse_gate_name(name);
            if (!gate) {
                fail(field + ".name", "unknown gate \"" + name + "\"; supported gates: " + supported_gate_names());
            }
            circuit.append(GateSpec::named(*gate, std::move(targets)));
        } else {
            circuit.append(GateSpec::explicit_unitary(
                UnitaryOperator(matrix_from_json(g["matrix"], field + ".matrix")), std::move(targets)));
        }
    }
    ReadoutSpec readout = ReadoutSpec::first_qubit_one();
    if (j.contains("readout")) readout = readout_from_json(j["readout"], "circuit.readout");
    for (const auto q : readout.qubits()) {
        if (q >= n) fail("circuit.readout.qubits", "qubit " + std::to_string(q) + " out of range");
    }
    return CircuitDocument{std::move(circuit), std::move(readout)};
}

Json circuit_to_json(const QuantumCircuit& circuit, const ReadoutSpec& readout) {
    Json j;
    j["qubits"] = circuit.qubits();
    Json gates = Json::array();
    for (const auto& gate : circuit.gates()) {
        Json g;
        if (const auto name = gate.name()) {
            g["name"] = std::string(gate_name(*name));
        } else {
            g["matrix"] = matrix_to_json(gate.matrix());
        }
        g["targets"] = gate.targets();
        gates.push_back(std::move(g));
    }
    j["gates"] = std::move(gates);
    j["readout"] = Json{{"qubits", readout.qubits()}, {"bits", readout.bits()}};
    return j;
}

OracleSpec oracle_from_json(const Json& j, std::string label) {
    const std::size_t n = index_from_json(member(j, "n", "oracle"), "oracle.n");
    const Json& table = member(j, "table", "oracle");
    const auto bits = bits_from_json(table, "oracle.table");
    return OracleSpec::from_table(n, std::vector<std::uint8_t>(bits.begin(), bits.end()), std::move(label));
}

std::string dump_deterministic(const Json& j) {
    std::ostringstream out;
    write_json(out, j, 0);
    out << "\n";
    return out.str();
}

}  // namespace gqc
