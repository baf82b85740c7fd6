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

#include <algorithm>
#include <cmath>
#include <string>

#include "gaugeqc/errors.hpp"

namespace gqc {

namespace {

void require_matching(const GaugeState& state, const Hamiltonian& h) {
    if (h.dim() != state.dim()) {
        throw ShapeError("dynamics: Hamiltonian has dimension " + std::to_string(h.dim()) +
                         " but the state has dimension " + std::to_string(state.dim()));
    }
}

}  // namespace

GaugeState evolve_closed(const GaugeState& state, const Hamiltonian& h, double t) {
    require_matching(state, h);
    // u_0 = I exactly; skip the transform so no rounding enters.
    if (t == 0.0) return state;
    return gauge_transform(state, expm_unitary(h.matrix, t));
}

HermitianOperator evolve_ode(const GaugeState& state, const Hamiltonian& h, double t, std::size_t steps) {
    require_matching(state, h);
    if (steps == 0) throw ValidationError("evolve_ode: steps must be positive");
    if (!std::isfinite(t)) throw ValidationError("evolve_ode: non-finite time");

    const Complex minus_i(0.0, -1.0);
    const ComplexMatrix& hm = h.matrix.matrix();
    const ComplexMatrix drive = commutator(state.triple().dirac_matrix(), hm);
    const auto rhs = [&](const ComplexMatrix& v) -> ComplexMatrix {
        return minus_i * (commutator(v, hm) + drive);
    };

    const double dt = t / static_cast<double>(steps);
    ComplexMatrix v = state.value_matrix();
    if (t == 0.0) return HermitianOperator(v);
    for (std::size_t k = 0; k < steps; ++k) {
        const ComplexMatrix k1 = rhs(v);
        const ComplexMatrix k2 = rhs(v + 0.5 * dt * k1);
        const ComplexMatrix k3 = rhs(v + 0.5 * dt * k2);
        const ComplexMatrix k4 = rhs(v + dt * k3);
        v += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return HermitianOperator(std::move(v), kOdeHermitianTolerance);
}

std::size_t default_ode_steps(double t) {
    return static_cast<std::size_t>(std::ceil(1000.0 * std::max(1.0, std::abs(t))));
}

}  // namespace gqc
