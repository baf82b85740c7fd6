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

#include "gaugeqc/gauge_state.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

#include "gaugeqc/errors.hpp"

namespace gqc {

namespace {

constexpr Complex kI{0.0, 1.0};

double canonical_residual(const SpectralTriple& triple, const ComplexMatrix& value,
                          const ComplexVector& phi, const ComplexMatrix& w) {
    const ComplexVector psi = w * phi;
    const ComplexMatrix& d = triple.dirac_matrix();
    const ComplexMatrix expected = outer(psi, psi) + w * d * w.adjoint() - d;
    return max_norm(value - expected);
}

double canonical_bound(const SpectralTriple& triple, const ComplexMatrix& value) {
    return kTolerance * std::max({1.0, max_norm(value), max_norm(triple.dirac_matrix())});
}

}  // namespace

UnitVector::UnitVector(ComplexVector v) : v_(std::move(v)) {
    if (v_.size() == 0) throw ValidationError("UnitVector: empty vector");
    if (!v_.allFinite()) throw ValidationError("UnitVector: non-finite entry");
    const double norm = v_.norm();
    if (std::abs(norm - 1.0) > kUnitNormTolerance) {
        throw ValidationError("UnitVector: norm is " + std::to_string(norm) + ", expected 1");
    }
}

ComplexMatrix reconstruct(const std::vector<WitnessTerm>& witness, const SpectralTriple& triple) {
    const auto n = static_cast<Eigen::Index>(triple.dim());
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto& term : witness) {
        if (term.left.rows() != n || term.left.cols() != n) {
            throw ShapeError("connection witness: left factor has the wrong dimension");
        }
        sum += term.left * commutator(triple.dirac_matrix(), term.right);
    }
    return sum;
}

bool verify_connection(const Connection& connection, const SpectralTriple& triple) {
    if (!connection.witness) {
        throw UnverifiableError("verify_connection: connection carries no decomposition witness");
    }
    if (connection.value.dim() != triple.dim()) {
        throw ShapeError("verify_connection: connection and triple dimensions differ");
    }
    const ComplexMatrix rebuilt = reconstruct(*connection.witness, triple);
    const double bound = kTolerance * std::max({1.0, max_norm(connection.value.matrix()),
                                                max_norm(triple.dirac_matrix())});
    return max_norm(connection.value.matrix() - rebuilt) <= bound;
}

EventProjector::EventProjector(ComplexMatrix m) : m_(std::move(m)) {
    const ComplexMatrix& e = m_.matrix();
    if (max_norm(e * e - e) > kTolerance * std::max(1.0, max_norm(e))) {
        throw ValidationError("EventProjector: matrix is not idempotent");
    }
}

GaugeState::GaugeState(SpectralTriple triple, HermitianOperator value, UnitVector base_state,
                       UnitaryOperator cumulative_unitary, OnViolation on_violation)
    : triple_(std::move(triple)),
      value_(std::move(value)),
      base_state_(std::move(base_state)),
      cumulative_unitary_(std::move(cumulative_unitary)) {
    if (value_.dim() != triple_.dim() || base_state_.dim() != triple_.dim() ||
        cumulative_unitary_.dim() != triple_.dim()) {
        throw ShapeError("GaugeState: value, base state, unitary and triple dimensions differ");
    }
    const double residual = canonical_residual(triple_, value_.matrix(), base_state_.vector(),
                                               cumulative_unitary_.matrix());
    if (residual > canonical_bound(triple_, value_.matrix())) {
        const std::string msg = "GaugeState: value differs from |w phi><w phi| + w D w^dagger - D by " +
                                std::to_string(residual);
        if (on_violation == OnViolation::kValidation) throw ValidationError(msg);
        throw CorruptionError(msg);
    }
}

GaugeState GaugeState::from_parts(SpectralTriple triple, ComplexMatrix value, ComplexVector base_state,
                                  ComplexMatrix cumulative_unitary) {
    return GaugeState(std::move(triple), HermitianOperator(std::move(value)),
                      UnitVector(std::move(base_state)), UnitaryOperator(std::move(cumulative_unitary)),
                      OnViolation::kValidation);
}

Connection GaugeState::connection() const {
    auto terms = encoding_terms(base_state_.vector(), encoding_witness(triple_));
    const ComplexMatrix& w = cumulative_unitary_.matrix();
    if (w == identity_matrix(dim())) return Connection{value_, std::move(terms)};

    // w (sum a_j [D, b_j]) w^dagger + w [D, w^dagger]
    //   = sum (w a_j) [D, b_j w^dagger] + (w - sum w a_j b_j) [D, w^dagger]
    const ComplexMatrix w_adj = w.adjoint();
    ComplexMatrix tail = w;
    std::vector<WitnessTerm> moved;
    moved.reserve(terms.size() + 1);
    for (auto& term : terms) {
        ComplexMatrix left = w * term.left;
        tail -= left * term.right;
        moved.push_back({std::move(left), term.right * w_adj});
    }
    moved.push_back({std::move(tail), w_adj});
    return Connection{value_, std::move(moved)};
}

EncodingWitness encoding_witness(const SpectralTriple& triple) {
    if (triple.is_scalar()) {
        throw ValidationError("encode_state: Dirac operator is scalar, no state can be encoded");
    }
    const auto& spec = triple.spectrum();
    const Eigen::Index last = spec.values.size() - 1;
    // Smallest and largest eigenvalues give the widest gap; pick the first
    // eigenvector of each (ascending order) in degenerate eigenspaces.
    Eigen::Index hi = last;
    while (hi > 0 && spec.values(last) - spec.values(hi - 1) <= kScalarGap) --hi;
    const double l1 = spec.values(0);
    const double l2 = spec.values(hi);
    const ComplexVector e1 = spec.vectors.col(0);
    const ComplexVector e2 = spec.vectors.col(hi);

    EncodingWitness out;
    out.b = (outer(e1, e2) + outer(e2, e1)) / (l1 - l2);
    out.phi = (e1 - kI * e2) / std::sqrt(2.0);
    return out;
}

std::vector<WitnessTerm> encoding_terms(const ComplexVector& psi, const EncodingWitness& w) {
    const ComplexMatrix a = outer(w.phi, psi);
    const ComplexMatrix a_adj = a.adjoint();
    std::vector<WitnessTerm> terms;
    const ComplexVector b_phi = w.b * w.phi;
    terms.push_back({kI * a_adj, outer(b_phi, psi)});
    terms.push_back({-kI * outer(psi, w.b.adjoint() * w.phi), a});
    return terms;
}

GaugeState encode_state(const UnitVector& psi, const SpectralTriple& triple) {
    if (psi.dim() != triple.dim()) {
        throw ShapeError("encode_state: state has dimension " + std::to_string(psi.dim()) +
                         " but the triple has dimension " + std::to_string(triple.dim()));
    }
    const EncodingWitness w = encoding_witness(triple);
    const ComplexVector& v = psi.vector();
    const ComplexMatrix projector = outer(v, v);

    const ComplexMatrix& d = triple.dirac_matrix();
    const ComplexVector eigen_check = kI * (d * (w.b * w.phi) - w.b * (d * w.phi)) - w.phi;
    const double bound = kTolerance * std::max(1.0, max_norm(d));
    if (eigen_check.cwiseAbs().maxCoeff() > bound) {
        throw CorruptionError("encode_state: i[D, b] does not fix phi");
    }
    // Witness identity tested on probe vectors.
    const std::vector<WitnessTerm> terms = encoding_terms(v, w);
    const auto n = static_cast<Eigen::Index>(triple.dim());
    ComplexVector probe(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        probe(k) = Complex(1.0 / static_cast<double>(k + 1), std::cos(static_cast<double>(k)));
    }
    for (const ComplexVector* x : std::initializer_list<const ComplexVector*>{&v, &w.phi, &probe}) {
        ComplexVector applied = ComplexVector::Zero(n);
        for (const auto& term : terms) {
            applied += term.left * (d * (term.right * *x) - term.right * (d * *x));
        }
        const ComplexVector expected = v * v.dot(*x);
        if ((applied - expected).cwiseAbs().maxCoeff() > bound * std::max(1.0, x->cwiseAbs().maxCoeff())) {
            throw CorruptionError("encode_state: connection witness does not reproduce |psi><psi|");
        }
    }
    return GaugeState(triple, HermitianOperator(projector), psi, UnitaryOperator::identity(triple.dim()),
                      GaugeState::OnViolation::kCorruption);
}

GaugeState encode_state(const ComplexVector& psi, const SpectralTriple& triple) {
    return encode_state(UnitVector(psi), triple);
}

GaugeState gauge_transform(const GaugeState& state, const UnitaryOperator& u) {
    if (u.dim() != state.dim()) {
        throw ShapeError("gauge_transform: unitary has dimension " + std::to_string(u.dim()) +
                         " but the state has dimension " + std::to_string(state.dim()));
    }
    const ComplexMatrix& d = state.triple().dirac_matrix();
    const ComplexMatrix& m = u.matrix();
    const ComplexMatrix m_adj = m.adjoint();
    // u V u^dagger + u [D, u^dagger] = u ((V + D) u^dagger - u^dagger D)
    ComplexMatrix value = m * ((state.value_matrix() + d) * m_adj - m_adj * d);
    return GaugeState(state.triple(), HermitianOperator(std::move(value)), state.base_state(),
                      u * state.cumulative_unitary(), GaugeState::OnViolation::kCorruption);
}

CanonicalForm canonical_form(const GaugeState& state) {
    const ComplexMatrix& w = state.cumulative_unitary().matrix();
    const double residual =
        canonical_residual(state.triple(), state.value_matrix(), state.base_state().vector(), w);
    if (residual > canonical_bound(state.triple(), state.value_matrix())) {
        throw CorruptionError("canonical_form: invariant violated, residual " + std::to_string(residual));
    }
    return CanonicalForm{w * state.base_state().vector(), state.cumulative_unitary()};
}

double measure_probability(const GaugeState& state, const EventProjector& event) {
    if (event.dim() != state.dim()) {
        throw ShapeError("measure_probability: event has dimension " + std::to_string(event.dim()) +
                         " but the state has dimension " + std::to_string(state.dim()));
    }
    const ComplexVector psi = state.cumulative_unitary().matrix() * state.base_state().vector();
    const Complex p = psi.dot(event.matrix() * psi);  // dot conjugates the left operand
    if (std::abs(p.imag()) > kTolerance) {
        throw CorruptionError("measure_probability: imaginary part " + std::to_string(p.imag()));
    }
    const double re = p.real();
    if (re < -kTolerance || re > 1.0 + kTolerance) {
        throw CorruptionError("measure_probability: probability " + std::to_string(re) +
                              " outside [0, 1]");
    }
    return std::clamp(re, 0.0, 1.0);
}

}  // namespace gqc
