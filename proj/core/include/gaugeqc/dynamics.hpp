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

#include "gaugeqc/gauge_state.hpp"
#include "gaugeqc/linalg.hpp"

namespace gqc {

/// Time-independent Hamiltonian generating u_t = e^{itH}.
struct Hamiltonian {
    HermitianOperator matrix;

    std::size_t dim() const noexcept { return matrix.dim(); }
};

/// G_t(V) = gauge_transform(state, e^{itH}).
GaugeState evolve_closed(const GaugeState& state, const Hamiltonian& h, double t);

/// Integrates dV/dt = -i([V, H] + [D, H]) from V_0 = state.value() with
/// classical fixed-step RK4. Returns a bare operator: integration has no
/// preparation to record.
HermitianOperator evolve_ode(const GaugeState& state, const Hamiltonian& h, double t, std::size_t steps);

/// 1000 * max(1, |t|), rounded up.
std::size_t default_ode_steps(double t);

/// Hermiticity tolerance of RK4 iterates.
inline constexpr double kOdeHermitianTolerance = 1e-8;

}  // namespace gqc
