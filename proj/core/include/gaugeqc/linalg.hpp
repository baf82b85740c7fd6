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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gqc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Relative max-norm tolerance used by every operator validation.
inline constexpr double kTolerance = 1e-10;

/// Largest absolute entry.
double max_norm(const ComplexMatrix& m);

/// True iff every entry is finite.
bool all_finite(const ComplexMatrix& m);

/// ||a - b||_max, requiring equal shapes.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol = kTolerance);
bool is_unitary(const ComplexMatrix& m, double tol = kTolerance);

/// A square matrix equal to its adjoint within a relative max-norm tolerance.
class HermitianOperator {
   public:
    /// Throws ValidationError if `m` is not square, has non-finite entries, or
    /// ||m - m^dagger||_max > tol * max(1, ||m||_max).
    explicit HermitianOperator(ComplexMatrix m, double tol = kTolerance);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }

   private:
    ComplexMatrix m_;
};

/// A square matrix with U U^dagger = U^dagger U = I within tolerance.
class UnitaryOperator {
   public:
    explicit UnitaryOperator(ComplexMatrix m, double tol = kTolerance);

    static UnitaryOperator identity(std::size_t dim);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }

    UnitaryOperator adjoint() const;

    /// Permutation matrix sending basis vector j to basis vector images[j].
    /// Throws ValidationError unless images is a bijection.
    static UnitaryOperator permutation(std::span<const std::size_t> images);

    // Products, tensor products and embeddings of unitaries are unitary; these
    // skip re-validation.
    friend UnitaryOperator operator*(const UnitaryOperator& a, const UnitaryOperator& b);
    friend UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b);
    friend UnitaryOperator embed_gate(const UnitaryOperator& gate, std::span<const std::size_t> targets,
                                      std::size_t n);

   private:
    struct Trusted {};
    UnitaryOperator(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

/// Eigenpairs of a Hermitian operator, eigenvalues ascending. Each eigenvector
/// is rescaled so that its first non-negligible component is real positive.
struct HermitianEigensystem {
    Eigen::VectorXd values;
    ComplexMatrix vectors;  // columns
};

HermitianEigensystem eigensystem(const HermitianOperator& h);

/// AB - BA. Throws ShapeError unless both are square of the same dimension.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; the left operand's index varies slowest.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of a list of factors, left to right.
ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors);

/// |v><w|
ComplexMatrix outer(const ComplexVector& v, const ComplexVector& w);

/// Embeds a 2^k x 2^k gate acting on `targets` into the n-qubit space.
///
/// Qubit 0 is the leftmost (most significant) tensor factor. The first listed
/// target is the most significant factor of the gate. Targets may be
/// non-adjacent and in any order; the gate is first tensored with the
/// identity and then conjugated by the basis permutation that moves the
/// targets into place.
///
/// Throws ValidationError for out-of-range or duplicate targets, or when the
/// gate size is not 2^targets.size(). Gates with one or two targets are the
/// common case; wider gates are accepted for whole-register stages.
ComplexMatrix embed_gate(const ComplexMatrix& gate, std::span<const std::size_t> targets,
                         std::size_t n);
UnitaryOperator embed_gate(const UnitaryOperator& gate, std::span<const std::size_t> targets, std::size_t n);
UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b);

/// e^{i t H} via the eigendecomposition of H.
UnitaryOperator expm_unitary(const HermitianOperator& h, double t);

ComplexMatrix identity_matrix(std::size_t dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Computational basis vector |index> of the given dimension.
ComplexVector basis_vector(std::size_t dim, std::size_t index);

/// Basis vector of a bit string, qubit 0 first: "01" -> |01> = e_1.
ComplexVector basis_state(std::span<const int> bits);

}  // namespace gqc
