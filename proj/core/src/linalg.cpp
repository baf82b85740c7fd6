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

#include <algorithm>
#include <cmath>
#include <string>

#include "gaugeqc/errors.hpp"

namespace gqc {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ValidationError(std::string(what) + ": expected a non-empty square matrix, got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

double scaled(double tol, const ComplexMatrix& m) { return tol * std::max(1.0, max_norm(m)); }

}  // namespace

double max_norm(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("max_abs_diff: shape mismatch");
    }
    return max_norm(a - b);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_norm(m - m.adjoint()) <= scaled(tol, m);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const auto id = ComplexMatrix::Identity(m.rows(), m.cols());
    const double bound = scaled(tol, m);
    return max_norm(m * m.adjoint() - id) <= bound && max_norm(m.adjoint() * m - id) <= bound;
}

HermitianOperator::HermitianOperator(ComplexMatrix m, double tol) : m_(std::move(m)) {
    require_square(m_, "HermitianOperator");
    if (!all_finite(m_)) throw ValidationError("HermitianOperator: non-finite entry");
    if (!is_hermitian(m_, tol)) {
        throw ValidationError("HermitianOperator: matrix is not Hermitian (||A - A^dagger||_max = " +
                              std::to_string(max_norm(m_ - m_.adjoint())) + ")");
    }
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m, double tol) : m_(std::move(m)) {
    require_square(m_, "UnitaryOperator");
    if (!all_finite(m_)) throw ValidationError("UnitaryOperator: non-finite entry");
    if (!is_unitary(m_, tol)) throw ValidationError("UnitaryOperator: matrix is not unitary");
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
    return UnitaryOperator(identity_matrix(dim), Trusted{});
}

UnitaryOperator UnitaryOperator::adjoint() const {
    return UnitaryOperator(m_.adjoint(), Trusted{});
}

UnitaryOperator UnitaryOperator::permutation(std::span<const std::size_t> images) {
    const std::size_t dim = images.size();
    std::vector<bool> hit(dim, false);
    for (const auto i : images) {
        if (i >= dim || hit[i]) throw ValidationError("UnitaryOperator::permutation: images are not a bijection");
        hit[i] = true;
    }
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) m(static_cast<Eigen::Index>(images[j]), static_cast<Eigen::Index>(j)) = 1.0;
    return UnitaryOperator(std::move(m), Trusted{});
}

UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b) {
    return UnitaryOperator(tensor(a.m_, b.m_), UnitaryOperator::Trusted{});
}

UnitaryOperator embed_gate(const UnitaryOperator& gate, std::span<const std::size_t> targets, std::size_t n) {
    return UnitaryOperator(embed_gate(gate.m_, targets, n), UnitaryOperator::Trusted{});
}

UnitaryOperator operator*(const UnitaryOperator& a, const UnitaryOperator& b) {
    if (a.dim() != b.dim()) throw ShapeError("unitary product: dimension mismatch");
    return UnitaryOperator(a.m_ * b.m_, UnitaryOperator::Trusted{});
}

HermitianEigensystem eigensystem(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) throw CorruptionError("eigensystem: solver did not converge");
    HermitianEigensystem out{solver.eigenvalues(), solver.eigenvectors()};
    for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
        auto col = out.vectors.col(c);
        for (Eigen::Index r = 0; r < col.size(); ++r) {
            const double mag = std::abs(col(r));
            if (mag > 1e-10) {
                col *= std::conj(col(r)) / mag;
                col(r) = Complex(mag, 0.0);
                break;
            }
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw ShapeError("commutator: operands must be square of equal dimension (got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
    }
    return a * b - b * a;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (const auto& f : factors) out = tensor(out, f);
    return out;
}

ComplexMatrix outer(const ComplexVector& v, const ComplexVector& w) {
    return v * w.adjoint();
}

ComplexMatrix embed_gate(const ComplexMatrix& gate, std::span<const std::size_t> targets,
                         std::size_t n) {
    const std::size_t k = targets.size();
    if (k == 0) throw ValidationError("embed_gate: no target qubits");
    if (k > n) throw ValidationError("embed_gate: more targets than qubits");
    for (std::size_t i = 0; i < k; ++i) {
        if (targets[i] >= n) {
            throw ValidationError("embed_gate: target " + std::to_string(targets[i]) +
                                  " out of range for " + std::to_string(n) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw ValidationError("embed_gate: duplicate target " + std::to_string(targets[i]));
            }
        }
    }
    const auto gate_dim = static_cast<Eigen::Index>(std::size_t{1} << k);
    if (gate.rows() != gate_dim || gate.cols() != gate_dim) {
        throw ValidationError("embed_gate: a gate on " + std::to_string(k) + " qubit(s) must be " +
                              std::to_string(gate_dim) + "x" + std::to_string(gate_dim));
    }

    // Layout after reordering: targets first (in listed order), then the
    // remaining qubits ascending. order[p] is the original qubit at position p.
    std::vector<std::size_t> order(targets.begin(), targets.end());
    for (std::size_t q = 0; q < n; ++q) {
        if (std::find(targets.begin(), targets.end(), q) == targets.end()) order.push_back(q);
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::size_t> perm(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t p = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            const std::size_t bit = (idx >> (n - 1 - order[pos])) & 1U;
            p |= bit << (n - 1 - pos);
        }
        perm[idx] = p;
    }

    const ComplexMatrix reordered = tensor(gate, identity_matrix(std::size_t{1} << (n - k)));
    ComplexMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                reordered(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(perm[j]));
        }
    }
    return out;
}

UnitaryOperator expm_unitary(const HermitianOperator& h, double t) {
    if (!std::isfinite(t)) throw ValidationError("expm_unitary: non-finite time");
    if (t == 0.0) return UnitaryOperator::identity(h.dim());
    const auto eig = eigensystem(h);
    ComplexVector phases(eig.values.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::exp(Complex(0.0, t * eig.values(i)));
    }
    return UnitaryOperator(eig.vectors * phases.asDiagonal() * eig.vectors.adjoint());
}

ComplexMatrix identity_matrix(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return ComplexMatrix::Identity(d, d);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    const Complex i(0.0, 1.0);
    ComplexMatrix m(2, 2);
    m << 0.0, -i, i, 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexVector basis_vector(std::size_t dim, std::size_t index) {
    if (index >= dim) throw ValidationError("basis_vector: index out of range");
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

ComplexVector basis_state(std::span<const int> bits) {
    std::size_t index = 0;
    for (const int b : bits) {
        if (b != 0 && b != 1) throw ValidationError("basis_state: bits must be 0 or 1");
        index = (index << 1) | static_cast<std::size_t>(b);
    }
    return basis_vector(std::size_t{1} << bits.size(), index);
}

}  // namespace gqc
