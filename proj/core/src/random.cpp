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

#include "gaugeqc/random.hpp"

#include <algorithm>
#include <cmath>

#include "gaugeqc/errors.hpp"

namespace gqc {

namespace {

ComplexMatrix gaussian_matrix(std::size_t dim, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(normal(rng), normal(rng));
    }
    return m;
}

}  // namespace

UnitaryOperator random_unitary(std::size_t dim, Rng& rng) {
    const ComplexMatrix z = gaussian_matrix(dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0.0) q.col(i) *= r(i, i) / mag;
    }
    return UnitaryOperator(std::move(q));
}

HermitianOperator random_hermitian(std::size_t dim, Rng& rng, double max_entry) {
    const ComplexMatrix z = gaussian_matrix(dim, rng);
    ComplexMatrix h = 0.5 * (z + z.adjoint());
    h *= max_entry / max_norm(h);
    // The rescale can leave the diagonal with rounding noise in the imaginary part.
    return HermitianOperator(0.5 * (h + h.adjoint()));
}

UnitVector random_unit_vector(std::size_t dim, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector v(static_cast<Eigen::Index>(dim));
    for (auto& c : v) c = Complex(normal(rng), normal(rng));
    return UnitVector(v / v.norm());
}

SpectralTriple random_triple(std::size_t dim, Rng& rng) {
    if (dim < 2) throw ValidationError("random_triple: a non-scalar Dirac operator needs dimension >= 2");
    std::uniform_real_distribution<double> scale(0.5, 3.0);
    for (;;) {
        HermitianOperator d = random_hermitian(dim, rng, scale(rng));
        SpectralTriple t = SpectralTriple::allowing_scalar(std::move(d));
        if (!t.is_scalar()) return t;
    }
}

QuantumCircuit random_circuit(std::size_t n, std::size_t depth, Rng& rng) {
    static constexpr NamedGate kSingle[] = {NamedGate::kX, NamedGate::kY, NamedGate::kZ,
                                            NamedGate::kH, NamedGate::kS, NamedGate::kT};
    static constexpr NamedGate kDouble[] = {NamedGate::kCNOT, NamedGate::kCZ, NamedGate::kSWAP};

    QuantumCircuit circuit(n);
    std::uniform_int_distribution<std::size_t> pick_qubit(0, n - 1);
    std::uniform_int_distribution<int> pick_kind(0, 3);
    for (std::size_t g = 0; g < depth; ++g) {
        const bool two = n >= 2 && pick_kind(rng) >= 2;
        std::vector<std::size_t> targets{pick_qubit(rng)};
        if (two) {
            std::size_t second = pick_qubit(rng);
            while (second == targets[0]) second = pick_qubit(rng);
            targets.push_back(second);
        }
        const bool named = pick_kind(rng) % 2 == 0;
        if (named && two) {
            std::uniform_int_distribution<std::size_t> pick(0, std::size(kDouble) - 1);
            circuit.append(kDouble[pick(rng)], std::move(targets));
        } else if (named) {
            std::uniform_int_distribution<std::size_t> pick(0, std::size(kSingle) - 1);
            circuit.append(kSingle[pick(rng)], std::move(targets));
        } else {
            const std::size_t dim = two ? 4 : 2;
            circuit.append(GateSpec::explicit_unitary(random_unitary(dim, rng), std::move(targets)));
        }
    }
    return circuit;
}

std::vector<std::uint8_t> random_balanced_table(std::size_t n, Rng& rng) {
    if (n == 0) throw ValidationError("random_balanced_table: need at least one input bit");
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    std::fill(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(table.size() / 2), 1);
    std::shuffle(table.begin(), table.end(), rng);
    return table;
}

}  // namespace gqc
