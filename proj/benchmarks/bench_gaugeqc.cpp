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

#include <benchmark/benchmark.h>

#include "gaugeqc/gaugeqc.hpp"

namespace {

using namespace gqc;

void BM_GaugeTransform(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const GaugeState s = encode_state(random_unit_vector(std::size_t{1} << n, rng), standard_qubit_triple(n));
    const UnitaryOperator u = random_unitary(std::size_t{1} << n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gauge_transform(s, u));
}
BENCHMARK(BM_GaugeTransform)->DenseRange(1, 7)->Unit(benchmark::kMicrosecond);

void BM_EncodeState(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const SpectralTriple triple = standard_qubit_triple(n);
    const UnitVector psi = random_unit_vector(std::size_t{1} << n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(encode_state(psi, triple));
}
BENCHMARK(BM_EncodeState)->DenseRange(1, 7)->Unit(benchmark::kMicrosecond);

void BM_CircuitGauge(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const QuantumCircuit circuit = random_circuit(n, 20, rng);
    const SpectralTriple triple = standard_qubit_triple(n);
    const UnitVector psi = random_unit_vector(std::size_t{1} << n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauge_readout(run_gauge_computation(circuit, psi, triple), ReadoutSpec::first_qubit_one()));
    }
}
BENCHMARK(BM_CircuitGauge)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

void BM_CircuitStatevector(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const QuantumCircuit circuit = random_circuit(n, 20, rng);
    const UnitVector psi = random_unit_vector(std::size_t{1} << n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(statevector_oracle(circuit, psi, ReadoutSpec::first_qubit_one()));
}
BENCHMARK(BM_CircuitStatevector)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

void BM_DeutschJozsa(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const OracleSpec oracle = OracleSpec::builtin(BuiltinOracle::kBalancedParity, n);
    const SpectralTriple triple = standard_qubit_triple(n + 1);
    for (auto _ : state) benchmark::DoNotOptimize(deutsch_jozsa(oracle, triple).probability);
}
BENCHMARK(BM_DeutschJozsa)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
