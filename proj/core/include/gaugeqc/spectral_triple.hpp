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
#include <memory>

#include "gaugeqc/linalg.hpp"

namespace gqc {

/// A finite spectral triple (M_N, C^N, D). The algebra is always the full
/// matrix algebra, so the triple is determined by its Dirac operator D.
///
/// The eigensystem of D is computed once at construction and shared between
/// copies.
class SpectralTriple {
   public:
    /// Throws ValidationError when D is a scalar multiple of the identity
    /// (fewer than two eigenvalues separated by more than 1e-9).
    explicit SpectralTriple(HermitianOperator dirac);

    /// Accepts scalar D as well. Such a triple is a valid factor for
    /// product_triple but cannot host encoded states.
    static SpectralTriple allowing_scalar(HermitianOperator dirac);

    std::size_t dim() const noexcept { return dirac_.dim(); }
    const HermitianOperator& dirac() const noexcept { return dirac_; }
    const ComplexMatrix& dirac_matrix() const noexcept { return dirac_.matrix(); }
    const HermitianEigensystem& spectrum() const noexcept { return *spectrum_; }

    /// True when every eigenvalue of D lies within 1e-9 of every other.
    bool is_scalar() const noexcept;

   private:
    SpectralTriple(HermitianOperator dirac, bool require_nonscalar);

    HermitianOperator dirac_;
    std::shared_ptr<const HermitianEigensystem> spectrum_;
};

/// Eigenvalue spread below which D counts as scalar.
inline constexpr double kScalarGap = 1e-9;

/// (A1 (x) A2, H1 (x) H2, D1 (x) I2 + I1 (x) D2). Either factor may be scalar;
/// the product is rejected only if it is scalar itself.
SpectralTriple product_triple(const SpectralTriple& first, const SpectralTriple& second);

/// The n-qubit triple with D = sum_i sigma_x acting on qubit i.
SpectralTriple standard_qubit_triple(std::size_t n);

/// The n-qubit triple with the diagonal D = sum_i sigma_z acting on qubit i.
SpectralTriple z_qubit_triple(std::size_t n);

}  // namespace gqc
