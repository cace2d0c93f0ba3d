// Copyright 2026 The qdiscord Authors
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

#include "qdiscord/bloch.h"
#include "qdiscord/discord.h"
#include "qdiscord/oracle.h"
#include "qdiscord/state_factory.h"
#include "qdiscord/total_correlations.h"

namespace {

using namespace qdiscord;

DensityMatrix qubits(int n) { return random_density(std::vector<int>(n, 2), 2, 1234 + n); }

void BM_BlochDecompose(benchmark::State &state) {
    const DensityMatrix rho = qubits(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bloch_decompose(rho));
}
BENCHMARK(BM_BlochDecompose)->DenseRange(2, 8, 2);

// Closed form from an existing decomposition; cost grows like 4^N.
void BM_ClosedFormDiscord(benchmark::State &state) {
    const BlochDecomposition dec = bloch_decompose(qubits(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(discord_qubit_closed_form(dec, 1));
}
BENCHMARK(BM_ClosedFormDiscord)->DenseRange(2, 8, 1);

void BM_TotalCorrelations(benchmark::State &state) {
    const BlochDecomposition dec = bloch_decompose(qubits(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(total_quantum_correlations(dec));
}
BENCHMARK(BM_TotalCorrelations)->DenseRange(2, 6, 1);

void BM_OracleDiscord(benchmark::State &state) {
    const DensityMatrix rho = qubits(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_discord_qubit(rho, 1));
}
BENCHMARK(BM_OracleDiscord)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GenericUpperBound(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const CoefficientTensor c = coefficient_tensor(random_density({d, 2}, 2 * d, 77));
    for (auto _ : state) benchmark::DoNotOptimize(discord_generic_upper_bound(c, 1, 4, 1));
}
BENCHMARK(BM_GenericUpperBound)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
