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

#include "gaugeqc/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "gaugeqc/errors.hpp"
#include "gaugeqc/random.hpp"
#include "oracles.hpp"

using namespace gqc;

namespace {

const Complex kI(0.0, 1.0);

SpectralTriple qubit_triple() { return SpectralTriple(HermitianOperator(pauli_x())); }
Hamiltonian ham(const ComplexMatrix& m) { return Hamiltonian{HermitianOperator(m)}; }

}  // namespace

TEST(EvolveClosed, zero_time_is_identity) {
    Rng rng(1);
    const auto t = standard_qubit_triple(2);
    const auto gs = gauge_transform(encode_state(random_unit_vector(4, rng), t), random_unitary(4, rng));
    const auto out = evolve_closed(gs, Hamiltonian{random_hermitian(4, rng)}, 0.0);
    EXPECT_LE(max_abs_diff(out.value_matrix(), gs.value_matrix()), 1e-14);
}

TEST(EvolveClosed, global_phase_acts_trivially) {
    const auto gs = encode_state(basis_vector(2, 0), qubit_triple());
    const auto out = evolve_closed(gs, ham(pauli_z()), std::numbers::pi);
    EXPECT_LE(max_abs_diff(out.value_matrix(), gs.value_matrix()), 1e-15);
}

TEST(EvolveClosed, hamiltonian_commuting_with_dirac) {
    const auto gs = encode_state(basis_vector(2, 0), qubit_triple());
    const auto out = evolve_closed(gs, ham(pauli_x()), 1.0);
    ComplexVector expected_state(2);
    expected_state << std::cos(1.0), kI * std::sin(1.0);
    EXPECT_LE(max_abs_diff(out.value_matrix(), outer(expected_state, expected_state)), 1e-15);
    EXPECT_LE((out.cumulative_unitary().matrix() * out.base_state().vector() - expected_state).norm(), 1e-15);
}

TEST(EvolveClosed, dimension_mismatch) {
    const auto gs = encode_state(basis_vector(2, 0), qubit_triple());
    EXPECT_THROW(evolve_closed(gs, ham(identity_matrix(4)), 1.0), ShapeError);
    EXPECT_THROW(evolve_ode(gs, ham(identity_matrix(4)), 1.0, 10), ShapeError);
}

TEST(EvolveClosed, group_law) {
    Rng rng(66);
    std::uniform_real_distribution<double> time(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = trial % 2 ? 4 : 2;
        const auto triple = random_triple(dim, rng);
        const auto gs = encode_state(random_unit_vector(dim, rng), triple);
        const Hamiltonian h{random_hermitian(dim, rng, 2.0)};
        const double t = time(rng);
        const double s = time(rng);
        EXPECT_LE(max_abs_diff(evolve_closed(evolve_closed(gs, h, s), h, t).value_matrix(),
                               evolve_closed(gs, h, t + s).value_matrix()),
                  1e-10);
    }
}

TEST(EvolveOde, zero_time_returns_initial_value) {
    Rng rng(2);
    const auto gs = encode_state(random_unit_vector(4, rng), standard_qubit_triple(2));
    EXPECT_EQ(evolve_ode(gs, Hamiltonian{random_hermitian(4, rng)}, 0.0, 17).matrix(), gs.value_matrix());
}

TEST(EvolveOde, stationary_when_rhs_vanishes) {
    // H = D commutes with D; V = |e><e| for an eigenvector e of D commutes with H.
    const auto triple = qubit_triple();
    ComplexVector e(2);
    e << 1.0, 1.0;
    e /= std::sqrt(2.0);
    const auto gs = encode_state(e, triple);
    const auto out = evolve_ode(gs, ham(pauli_x()), 3.0, 50);
    EXPECT_LE(max_abs_diff(out.matrix(), gs.value_matrix()), 1e-15);
}

TEST(EvolveOde, matches_closed_form_for_sigma_z) {
    const auto gs = encode_state(basis_vector(2, 0), qubit_triple());
    const auto h = ham(pauli_z());
    const auto rk4 = evolve_ode(gs, h, 1.0, 1000);
    EXPECT_LE(max_abs_diff(rk4.matrix(), evolve_closed(gs, h, 1.0).value_matrix()), 1e-6);
}

TEST(EvolveOde, agrees_with_closed_form_on_random_inputs) {
    Rng rng(123);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t dim = trial % 2 ? 4 : 2;
        const auto triple = random_triple(dim, rng);
        const auto gs = gauge_transform(encode_state(random_unit_vector(dim, rng), triple), random_unitary(dim, rng));
        const Hamiltonian h{random_hermitian(dim, rng, 2.0)};
        const auto rk4 = evolve_ode(gs, h, 1.0, 1000);
        EXPECT_LE(max_abs_diff(rk4.matrix(), evolve_closed(gs, h, 1.0).value_matrix()), 1e-6);
        EXPECT_LE(max_abs_diff(rk4.matrix(), rk4.matrix().adjoint()), 1e-8);
    }
}

TEST(EvolveOde, fourth_order_convergence) {
    Rng rng(5);
    const auto triple = standard_qubit_triple(2);
    const auto gs = encode_state(random_unit_vector(4, rng), triple);
    const Hamiltonian h{random_hermitian(4, rng, 2.0)};
    const auto exact = evolve_closed(gs, h, 1.0).value_matrix();
    const double coarse = max_abs_diff(evolve_ode(gs, h, 1.0, 25).matrix(), exact);
    const double fine = max_abs_diff(evolve_ode(gs, h, 1.0, 50).matrix(), exact);
    const double factor = coarse / fine;
    EXPECT_GE(factor, 8.0);
    EXPECT_LE(factor, 32.0);
}

TEST(EvolveOde, rejects_zero_steps) {
    const auto gs = encode_state(basis_vector(2, 0), qubit_triple());
    EXPECT_THROW(evolve_ode(gs, ham(pauli_z()), 1.0, 0), ValidationError);
}

TEST(EvolveOde, default_steps) {
    EXPECT_EQ(default_ode_steps(0.0), 1000u);
    EXPECT_EQ(default_ode_steps(0.5), 1000u);
    EXPECT_EQ(default_ode_steps(-2.5), 2500u);
}
