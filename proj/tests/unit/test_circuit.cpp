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

#include <numbers>

#include "gtest/gtest.h"

#include "gaugeqc/errors.hpp"
#include "gaugeqc/random.hpp"
#include "oracles.hpp"

using namespace gqc;

namespace {

QuantumCircuit bell() {
    QuantumCircuit c(2);
    c.append(NamedGate::kH, {0}).append(NamedGate::kCNOT, {0, 1});
    return c;
}

UnitVector ket(std::initializer_list<int> bits) {
    const std::vector<int> b(bits);
    return UnitVector(basis_state(b));
}

ComplexMatrix expected_final_value(const QuantumCircuit& c, const UnitVector& psi, const SpectralTriple& t) {
    const ComplexMatrix g = compile_circuit(c).matrix();
    const ComplexVector out = g * psi.vector();
    return outer(out, out) + g * t.dirac_matrix() * g.adjoint() - t.dirac_matrix();
}

}  // namespace

TEST(GateNames, parse_and_list) {
    EXPECT_EQ(parse_gate_name("CNOT"), NamedGate::kCNOT);
    EXPECT_FALSE(parse_gate_name("TOFFOLI").has_value());
    EXPECT_EQ(supported_gate_names(), "X, Y, Z, H, S, T, CNOT, CZ, SWAP");
    for (const auto g : {NamedGate::kX, NamedGate::kY, NamedGate::kZ, NamedGate::kH, NamedGate::kS, NamedGate::kT,
                         NamedGate::kCNOT, NamedGate::kCZ, NamedGate::kSWAP}) {
        EXPECT_TRUE(is_unitary(gate_matrix(g))) << gate_name(g);
        EXPECT_EQ(gate_matrix(g).rows(), Eigen::Index{1} << gate_arity(g));
    }
}

TEST(GateSpec, arity_and_targets) {
    EXPECT_THROW(GateSpec::named(NamedGate::kCNOT, {0}), ValidationError);
    EXPECT_THROW(GateSpec::named(NamedGate::kX, {0, 1}), ValidationError);
    EXPECT_THROW(GateSpec::named(NamedGate::kSWAP, {1, 1}), ValidationError);
    EXPECT_THROW(GateSpec::explicit_unitary(UnitaryOperator::identity(4), {0}), ValidationError);
    QuantumCircuit c(2);
    EXPECT_THROW(c.append(NamedGate::kX, {2}), ValidationError);
}

TEST(CompileCircuit, examples) {
    EXPECT_EQ(compile_circuit(QuantumCircuit(2)).matrix(), identity_matrix(4));
    QuantumCircuit x(1);
    x.append(NamedGate::kX, {0});
    EXPECT_EQ(compile_circuit(x).matrix(), pauli_x());

    // Hand product: CNOT * (H (x) I).
    ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    const ComplexMatrix h = gqc::testing::mat2(1.0, 1.0, 1.0, -1.0) / std::numbers::sqrt2;
    const ComplexMatrix by_hand = cnot * tensor(h, identity_matrix(2));
    const ComplexMatrix gamma = compile_circuit(bell()).matrix();
    EXPECT_LE(max_abs_diff(gamma, by_hand), 1e-15);
    ComplexVector phi_plus = ComplexVector::Zero(4);
    phi_plus(0) = phi_plus(3) = 1.0 / std::numbers::sqrt2;
    EXPECT_LE((gamma * basis_vector(4, 0) - phi_plus).norm(), 1e-15);
}

TEST(CompileCircuit, order_follows_application) {
    QuantumCircuit hx(1);
    hx.append(NamedGate::kH, {0}).append(NamedGate::kS, {0});
    QuantumCircuit xh(1);
    xh.append(NamedGate::kS, {0}).append(NamedGate::kH, {0});
    const auto a = compile_circuit(hx).matrix();
    EXPECT_LE(max_abs_diff(a, gate_matrix(NamedGate::kS) * gate_matrix(NamedGate::kH)), 1e-15);
    EXPECT_GT(max_abs_diff(a, compile_circuit(xh).matrix()), 0.1);
}

TEST(ProjectorOf, examples) {
    const ComplexMatrix p1 = outer(basis_vector(2, 1), basis_vector(2, 1));
    EXPECT_EQ(projector_of(ReadoutSpec::first_qubit_one(), 2).matrix(), tensor(p1, identity_matrix(2)));
    EXPECT_EQ(projector_of(ReadoutSpec({0, 1}, {0, 0}), 2).matrix(), outer(basis_vector(4, 0), basis_vector(4, 0)));
    EXPECT_EQ(projector_of(ReadoutSpec(), 2).matrix(), identity_matrix(4));
    EXPECT_THROW(projector_of(ReadoutSpec({2}, {0}), 2), ValidationError);
    EXPECT_THROW(ReadoutSpec({0, 0}, {0, 1}), ValidationError);
    EXPECT_THROW(ReadoutSpec({0}, {2}), ValidationError);
    EXPECT_THROW(ReadoutSpec({0, 1}, {0}), ValidationError);
}

TEST(RunGaugeComputation, examples) {
    const SpectralTriple t1{HermitianOperator(pauli_x())};
    const auto empty = run_gauge_computation(QuantumCircuit(1), ket({0}), t1);
    EXPECT_EQ(empty.value_matrix(), encode_state(ket({0}), t1).value_matrix());

    QuantumCircuit x(1);
    x.append(NamedGate::kX, {0});
    EXPECT_EQ(run_gauge_computation(x, ket({0}), t1).value_matrix(), gqc::testing::mat2(0.0, 0.0, 0.0, 1.0));

    EXPECT_THROW(run_gauge_computation(x, ket({0}), standard_qubit_triple(2)), ShapeError);
}

TEST(RunGaugeComputation, final_value_identity_on_random_circuit) {
    Rng rng(31);
    const auto c = random_circuit(3, 10, rng);
    const auto psi = random_unit_vector(8, rng);
    const auto t = standard_qubit_triple(3);
    const auto gs = run_gauge_computation(c, psi, t);
    EXPECT_LE(max_abs_diff(gs.value_matrix(), expected_final_value(c, psi, t)), 1e-10);
}

TEST(GaugeReadout, examples) {
    const auto t2 = standard_qubit_triple(2);
    EXPECT_NEAR(gauge_readout(run_gauge_computation(bell(), ket({0, 0}), t2), ReadoutSpec::first_qubit_one()),
                0.5, 1e-15);

    const SpectralTriple t1{HermitianOperator(pauli_x())};
    EXPECT_EQ(gauge_readout(run_gauge_computation(QuantumCircuit(1), ket({0}), t1), ReadoutSpec::first_qubit_one()),
              0.0);
    QuantumCircuit x(1);
    x.append(NamedGate::kX, {0});
    EXPECT_EQ(gauge_readout(run_gauge_computation(x, ket({0}), t1), ReadoutSpec::first_qubit_one()), 1.0);
}

TEST(StatevectorOracle, examples) {
    EXPECT_NEAR(statevector_oracle(bell(), ket({0, 0}), ReadoutSpec::first_qubit_one()), 0.5, 1e-15);
    EXPECT_EQ(statevector_oracle(QuantumCircuit(1), ket({1}), ReadoutSpec::first_qubit_one()), 1.0);
    QuantumCircuit h(1);
    h.append(NamedGate::kH, {0});
    EXPECT_NEAR(statevector_oracle(h, ket({0}), ReadoutSpec({0}, {0})), 0.5, 1e-15);

    const ComplexVector amps = simulate_statevector(bell(), ket({0, 0}));
    EXPECT_NEAR(amps(0).real(), 1.0 / std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(amps(3).real(), 1.0 / std::numbers::sqrt2, 1e-15);
    EXPECT_EQ(amps(1), Complex(0.0, 0.0));
    EXPECT_EQ(amps(2), Complex(0.0, 0.0));
}

TEST(StatevectorOracle, agrees_with_compiled_unitary) {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 4;
        const auto c = random_circuit(n, 12, rng);
        const auto psi = random_unit_vector(c.dim(), rng);
        EXPECT_LE((simulate_statevector(c, psi) - compile_circuit(c).matrix() * psi.vector()).norm(), 1e-12);
    }
}

TEST(ModelEquivalence, gauge_matches_oracle_on_random_circuits) {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 4;
        const auto c = random_circuit(n, 15, rng);
        const auto psi = random_unit_vector(c.dim(), rng);
        const auto t = random_triple(c.dim(), rng);
        std::vector<std::size_t> qubits{static_cast<std::size_t>(trial) % n};
        const ReadoutSpec r(qubits, {trial % 2});
        const auto gs = run_gauge_computation(c, psi, t);
        EXPECT_LE(std::abs(gauge_readout(gs, r) - statevector_oracle(c, psi, r)), 1e-10);
    }
}

TEST(QubitsForDim, powers_of_two_only) {
    EXPECT_EQ(qubits_for_dim(8), 3u);
    EXPECT_THROW(qubits_for_dim(6), ShapeError);
    EXPECT_THROW(qubits_for_dim(1), ShapeError);
}
