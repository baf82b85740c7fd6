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

#include "gaugeqc/linalg.hpp"

#include <numbers>

#include "gtest/gtest.h"

#include "gaugeqc/errors.hpp"
#include "gaugeqc/random.hpp"
#include "oracles.hpp"

using namespace gqc;
using gqc::testing::mat2;

namespace {
const Complex kI(0.0, 1.0);
}

TEST(Commutator, pauli_algebra) {
    EXPECT_LE(max_abs_diff(commutator(pauli_x(), pauli_y()), 2.0 * kI * pauli_z()), 0.0);
    EXPECT_LE(max_abs_diff(commutator(pauli_x(), pauli_z()), -2.0 * kI * pauli_y()), 0.0);
    const ComplexMatrix a = mat2(1.0, 2.0, kI, 3.0);
    EXPECT_EQ(commutator(a, a), ComplexMatrix::Zero(2, 2));
}

TEST(Commutator, dimension_mismatch) {
    EXPECT_THROW(commutator(pauli_x(), identity_matrix(4)), ShapeError);
    EXPECT_THROW(commutator(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)), ShapeError);
}

TEST(Commutator, anti_hermitian_for_hermitian_operands) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_hermitian(4, rng).matrix();
        const auto b = random_hermitian(4, rng).matrix();
        const ComplexMatrix c = commutator(a, b);
        EXPECT_LE(max_abs_diff(c.adjoint(), -c), 1e-12);
    }
}

TEST(Tensor, examples) {
    EXPECT_EQ(tensor(identity_matrix(2), identity_matrix(2)), identity_matrix(4));

    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
    EXPECT_EQ(tensor(pauli_x(), identity_matrix(2)), expected);

    ComplexMatrix zz = ComplexMatrix::Zero(4, 4);
    zz.diagonal() << 1.0, -1.0, -1.0, 1.0;
    EXPECT_EQ(tensor(pauli_z(), pauli_z()), zz);
}

TEST(Tensor, associative_on_integer_entries) {
    Rng rng(3);
    std::uniform_int_distribution<int> pick(-3, 3);
    const auto integer_matrix = [&](Eigen::Index r, Eigen::Index c) {
        ComplexMatrix m(r, c);
        for (auto& z : m.reshaped()) z = Complex(pick(rng), pick(rng));
        return m;
    };
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = integer_matrix(2, 3);
        const auto b = integer_matrix(3, 2);
        const auto c = integer_matrix(2, 2);
        EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
    }
}

TEST(EmbedGate, direct_tensor_and_identity) {
    const ComplexMatrix h = mat2(1.0, 1.0, 1.0, -1.0) / std::numbers::sqrt2;
    const std::size_t t0[] = {0};
    EXPECT_EQ(embed_gate(h, t0, 2), tensor(h, identity_matrix(2)));
    const std::size_t t01[] = {0, 1};
    EXPECT_EQ(embed_gate(identity_matrix(4), t01, 3), identity_matrix(8));
}

TEST(EmbedGate, reversed_cnot_matches_brute_force) {
    ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    const std::size_t targets[] = {1, 0};
    const ComplexMatrix m = embed_gate(cnot, targets, 2);
    EXPECT_EQ(m, gqc::testing::brute_force_embed(cnot, {1, 0}, 2));
    // Control on qubit 1: |01> <-> |11>, |00> and |10> fixed.
    EXPECT_EQ(m * basis_vector(4, 0b01), basis_vector(4, 0b11));
    EXPECT_EQ(m * basis_vector(4, 0b11), basis_vector(4, 0b01));
    EXPECT_EQ(m * basis_vector(4, 0b00), basis_vector(4, 0b00));
    EXPECT_EQ(m * basis_vector(4, 0b10), basis_vector(4, 0b10));
}

TEST(EmbedGate, random_placements_match_brute_force) {
    Rng rng(5);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                const auto g = random_unitary(4, rng).matrix();
                const std::size_t targets[] = {a, b};
                EXPECT_LE(max_abs_diff(embed_gate(g, targets, n), gqc::testing::brute_force_embed(g, {a, b}, n)),
                          1e-15);
            }
        }
    }
}

TEST(EmbedGate, errors) {
    const std::size_t out_of_range[] = {2};
    EXPECT_THROW(embed_gate(pauli_x(), out_of_range, 2), ValidationError);
    const std::size_t dup[] = {1, 1};
    EXPECT_THROW(embed_gate(identity_matrix(4), dup, 2), ValidationError);
    const std::size_t one[] = {0};
    EXPECT_THROW(embed_gate(identity_matrix(4), one, 2), ValidationError);
    const std::size_t two[] = {0, 1};
    EXPECT_THROW(embed_gate(pauli_x(), two, 2), ValidationError);
}

TEST(EmbedGate, disjoint_single_qubit_gates_commute) {
    Rng rng(8);
    const std::size_t n = 3;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t i = static_cast<std::size_t>(trial) % n;
        const std::size_t j = (i + 1 + static_cast<std::size_t>(trial / n) % (n - 1)) % n;
        const std::size_t ti[] = {i};
        const std::size_t tj[] = {j};
        const auto g = embed_gate(random_unitary(2, rng).matrix(), ti, n);
        const auto h = embed_gate(random_unitary(2, rng).matrix(), tj, n);
        EXPECT_LE(max_norm(commutator(g, h)), 1e-12);
    }
}

TEST(ExpmUnitary, examples) {
    const HermitianOperator z(pauli_z());
    EXPECT_LE(max_abs_diff(expm_unitary(z, 0.0).matrix(), identity_matrix(2)), 0.0);
    EXPECT_LE(max_abs_diff(expm_unitary(z, std::numbers::pi).matrix(), -identity_matrix(2)), 1e-15);

    const HermitianOperator x(pauli_x());
    const ComplexMatrix u = expm_unitary(x, std::numbers::pi / 2).matrix();
    const ComplexMatrix series = gqc::testing::expm_series(pauli_x(), std::numbers::pi / 2, 20);
    EXPECT_LE(max_abs_diff(series, kI * pauli_x()), 1e-12);
    EXPECT_LE(max_abs_diff(u, series), 1e-12);
    EXPECT_LE(max_abs_diff(u, kI * pauli_x()), 1e-15);
}

TEST(ExpmUnitary, agrees_with_power_series_on_random_input) {
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = random_hermitian(4, rng, 0.5);
        EXPECT_LE(max_abs_diff(expm_unitary(h, 0.7).matrix(), gqc::testing::expm_series(h.matrix(), 0.7, 40)),
                  1e-12);
    }
}

TEST(ExpmUnitary, one_parameter_group) {
    Rng rng(2);
    std::uniform_real_distribution<double> time(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = random_hermitian(4, rng, 2.0);
        const double t = time(rng);
        const double s = time(rng);
        const ComplexMatrix lhs = expm_unitary(h, t).matrix() * expm_unitary(h, s).matrix();
        EXPECT_LE(max_abs_diff(lhs, expm_unitary(h, t + s).matrix()), 1e-10);
    }
}

TEST(ExpmUnitary, rejects_non_hermitian) {
    EXPECT_THROW(HermitianOperator(mat2(0.0, 1.0, 0.0, 0.0)), ValidationError);
}

TEST(Operators, validation) {
    EXPECT_THROW(UnitaryOperator(2.0 * identity_matrix(2)), ValidationError);
    EXPECT_THROW(HermitianOperator(ComplexMatrix::Zero(2, 3)), ValidationError);
    ComplexMatrix nan = identity_matrix(2);
    nan(0, 0) = std::nan("");
    EXPECT_THROW(HermitianOperator{nan}, ValidationError);
    EXPECT_NO_THROW(UnitaryOperator(pauli_y()));
    // Relative tolerance: a large Hermitian matrix with rounding-sized asymmetry passes.
    ComplexMatrix big = 1e6 * pauli_x();
    big(0, 1) += 1e-6;
    EXPECT_NO_THROW(HermitianOperator{big});
}

TEST(Eigensystem, phase_convention) {
    Rng rng(4);
    const auto h = random_hermitian(5, rng);
    const auto eig = eigensystem(h);
    for (Eigen::Index c = 0; c < eig.vectors.cols(); ++c) {
        const Complex lead = eig.vectors(0, c);
        EXPECT_NEAR(lead.imag(), 0.0, 1e-15);
        EXPECT_GT(lead.real(), 0.0);
        EXPECT_LE((h.matrix() * eig.vectors.col(c) - eig.values(c) * eig.vectors.col(c)).norm(), 1e-12);
    }
}
