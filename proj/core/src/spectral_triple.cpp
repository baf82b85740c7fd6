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

#include "gaugeqc/spectral_triple.hpp"

#include <bit>

#include "gaugeqc/errors.hpp"

namespace gqc {

SpectralTriple::SpectralTriple(HermitianOperator dirac) : SpectralTriple(std::move(dirac), true) {}

SpectralTriple SpectralTriple::allowing_scalar(HermitianOperator dirac) {
    return SpectralTriple(std::move(dirac), false);
}

SpectralTriple::SpectralTriple(HermitianOperator dirac, bool require_nonscalar)
    : dirac_(std::move(dirac)),
      spectrum_(std::make_shared<const HermitianEigensystem>(eigensystem(dirac_))) {
    if (require_nonscalar && is_scalar()) {
        throw ValidationError(
            "SpectralTriple: Dirac operator is a scalar multiple of the identity; "
            "at least two distinct eigenvalues are required");
    }
}

bool SpectralTriple::is_scalar() const noexcept {
    const auto& ev = spectrum_->values;
    return ev.size() < 2 || ev.maxCoeff() - ev.minCoeff() <= kScalarGap;
}

SpectralTriple product_triple(const SpectralTriple& first, const SpectralTriple& second) {
    const ComplexMatrix d = tensor(first.dirac_matrix(), identity_matrix(second.dim())) +
                            tensor(identity_matrix(first.dim()), second.dirac_matrix());
    return SpectralTriple(HermitianOperator(d));
}

SpectralTriple standard_qubit_triple(std::size_t n) {
    if (n == 0) throw ValidationError("standard_qubit_triple: need at least one qubit");
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const ComplexMatrix sx = pauli_x();
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t target[] = {q};
        d += embed_gate(sx, target, n);
    }
    return SpectralTriple(HermitianOperator(std::move(d)));
}

SpectralTriple z_qubit_triple(std::size_t n) {
    if (n == 0) throw ValidationError("z_qubit_triple: need at least one qubit");
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        const auto ones = static_cast<double>(std::popcount(x));
        d(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = static_cast<double>(n) - 2.0 * ones;
    }
    return SpectralTriple(HermitianOperator(std::move(d)));
}

}  // namespace gqc
