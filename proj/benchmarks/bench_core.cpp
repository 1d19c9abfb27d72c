// Copyright 2026 The coherence-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "cohlab/interferometer.hpp"
#include "cohlab/measures.hpp"

using namespace cohlab;

namespace {

void BM_uhlmann_fidelity(benchmark::State& state) {
  const Index dim = state.range(0);
  const DensityMatrix a = random_density(dim, dim, 1);
  const DensityMatrix b = random_density(dim, dim / 2 + 1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uhlmann_fidelity(a, b));
  }
}
BENCHMARK(BM_uhlmann_fidelity)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_coherence_sp(benchmark::State& state) {
  const Index dim = state.range(0);
  const DensityMatrix a = random_density(dim, dim, 3);
  const DensityMatrix b = random_density(dim, dim, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherence_sp(a, b));
  }
}
BENCHMARK(BM_coherence_sp)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_maximize_sp_numeric(benchmark::State& state) {
  const Index dim = state.range(0);
  const PureState psi = random_pure(dim, 5);
  const KrausChannel a = preparation_channel(psi, random_density(dim, dim, 6));
  const KrausChannel b = preparation_channel(psi, random_density(dim, dim, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_sp_numeric(a, b, psi, 1, 100).value);
  }
}
BENCHMARK(BM_maximize_sp_numeric)->Arg(2)->Arg(3)->Arg(4);

void BM_build_lsp_dilation(benchmark::State& state) {
  const Index dim = state.range(0);
  const LSPGluing g = random_lsp_gluing(dim, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_lsp_dilation(g).block_b.rows());
  }
}
BENCHMARK(BM_build_lsp_dilation)->Arg(2)->Arg(3);

void BM_phase_scan(benchmark::State& state) {
  const Index dim = state.range(0);
  const GluedDilation d = build_lsp_dilation(random_lsp_gluing(dim, 9));
  const PureState psi = random_pure(dim, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_scan(d, psi).pattern.visibility);
  }
}
BENCHMARK(BM_phase_scan)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
