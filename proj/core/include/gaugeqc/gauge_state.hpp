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

#include <optional>
#include <vector>

#include "gaugeqc/linalg.hpp"
#include "gaugeqc/spectral_triple.hpp"

namespace gqc {

/// A vector with Euclidean norm 1 (within 1e-12).
class UnitVector {
   public:
    explicit UnitVector(ComplexVector v);

    const ComplexVector& vector() const noexcept { return v_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(v_.size()); }

   private:
    ComplexVector v_;
};

inline constexpr double kUnitNormTolerance = 1e-12;

/// One term a_j [D, b_j] of a connection decomposition.
struct WitnessTerm {
    ComplexMatrix left;   // a_j
    ComplexMatrix right;  // b_j
};

/// A selfadjoint operator V together with an optional decomposition
/// V = sum_j a_j [D, b_j].
struct Connection {
    HermitianOperator value;
    std::optional<std::vector<WitnessTerm>> witness;
};

/// sum_j a_j [D, b_j]
ComplexMatrix reconstruct(const std::vector<WitnessTerm>& witness, const SpectralTriple& triple);

/// True iff the witness reproduces V within 1e-10 (relative to max(1, ||V||_max,
/// ||D||_max)). Throws UnverifiableError when the connection has no witness and
/// ShapeError when any operand has the wrong dimension.
bool verify_connection(const Connection& connection, const SpectralTriple& triple);

/// An orthogonal projector E = E^dagger = E^2.
class EventProjector {
   public:
    explicit EventProjector(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }
    std::size_t dim() const noexcept { return m_.dim(); }

   private:
    HermitianOperator m_;
};

/// A gauge state V = |w phi><w phi| + w D w^dagger - D, stored with the
/// preparation (phi, w) it came from. Measurement probabilities are defined
/// through that preparation, so a bare matrix is never a GaugeState.
class GaugeState {
   public:
    /// Rebuilds a state from exported parts. Throws ValidationError unless
    /// every invariant holds, including the canonical-form identity.
    static GaugeState from_parts(SpectralTriple triple, ComplexMatrix value, ComplexVector base_state,
                                 ComplexMatrix cumulative_unitary);

    const SpectralTriple& triple() const noexcept { return triple_; }
    const HermitianOperator& value() const noexcept { return value_; }
    const ComplexMatrix& value_matrix() const noexcept { return value_.matrix(); }
    const UnitVector& base_state() const noexcept { return base_state_; }
    const UnitaryOperator& cumulative_unitary() const noexcept { return cumulative_unitary_; }
    std::size_t dim() const noexcept { return triple_.dim(); }

    /// The value as a connection on the triple, with an explicit witness:
    /// the encoding witness of the base state transported through w.
    Connection connection() const;

   private:
    enum class OnViolation { kValidation, kCorruption };

    GaugeState(SpectralTriple triple, HermitianOperator value, UnitVector base_state,
               UnitaryOperator cumulative_unitary, OnViolation on_violation);

    SpectralTriple triple_;
    HermitianOperator value_;
    UnitVector base_state_;
    UnitaryOperator cumulative_unitary_;

    friend GaugeState encode_state(const UnitVector&, const SpectralTriple&);
    friend GaugeState gauge_transform(const GaugeState&, const UnitaryOperator&);
};

/// The vector phi and selfadjoint b used to write a pure state as a
/// connection: i[D, b] phi = phi.
///
/// With e1, e2 the eigenvectors of the smallest and largest eigenvalues of D
/// (first of each in ascending order), b = (l1 - l2)^-1 (|e1><e2| + |e2><e1|)
/// and phi = (e1 - i e2) / sqrt(2).
struct EncodingWitness {
    ComplexVector phi;
    ComplexMatrix b;
};

/// Throws ValidationError for a scalar Dirac operator.
EncodingWitness encoding_witness(const SpectralTriple& triple);

/// Witness terms {(i a^dagger, b a), (-i a^dagger b, a)} with a = |phi><psi|.
std::vector<WitnessTerm> encoding_terms(const ComplexVector& psi, const EncodingWitness& w);

/// V_psi = |psi><psi| with base state psi and w = I. The connection witness
/// is checked against the projector before returning.
GaugeState encode_state(const UnitVector& psi, const SpectralTriple& triple);
GaugeState encode_state(const ComplexVector& psi, const SpectralTriple& triple);

/// G_u(V) = u V u^dagger + u [D, u^dagger]; the base state is kept and the
/// cumulative unitary becomes u w.
GaugeState gauge_transform(const GaugeState& state, const UnitaryOperator& u);

struct CanonicalForm {
    ComplexVector state;      // psi' = w phi
    UnitaryOperator unitary;  // w
};

/// (w phi, w) with V = |psi'><psi'| + w D w^dagger - D, re-verified numerically.
/// Throws CorruptionError when the identity does not hold.
CanonicalForm canonical_form(const GaugeState& state);

/// <phi| w^dagger E w |phi>. Values within 1e-10 outside [0, 1] are clamped;
/// larger excursions or an imaginary part above 1e-10 raise CorruptionError.
double measure_probability(const GaugeState& state, const EventProjector& event);

}  // namespace gqc
