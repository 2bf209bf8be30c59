// Copyright 2026 The netwit Authors
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

#include "netwit/graph.hpp"
#include "netwit/network.hpp"
#include "netwit/protocol.hpp"
#include "netwit/states.hpp"
#include "netwit/witness.hpp"

namespace {

using namespace netwit;

void BM_HermitianEigen(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix m = random_density({d, d}, 1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen)->Arg(2)->Arg(3)->Arg(4);

void BM_FilterExact(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const NetworkState n = flip_network(d);
  const DensityOperator rho = random_density({d, d}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(filtering_channel(rho, n));
}
BENCHMARK(BM_FilterExact)->Arg(2)->Arg(3)->Arg(4);

void BM_DetectCl4(benchmark::State& state) {
  const NetworkState n = graph_network(cl4_graph(), cl4_labels());
  const Witness w = graph_witness(cl4_graph(), cl4_labels());
  const DensityOperator rho = random_density(Dims(4, 2), 3);
  for (auto _ : state) benchmark::DoNotOptimize(detect_exact(rho, n, w));
}
BENCHMARK(BM_DetectCl4)->Unit(benchmark::kMillisecond);

void BM_Shots(benchmark::State& state) {
  const NetworkState n = two_qubit_network();
  const Witness w = two_qubit_pt_witness();
  const DensityOperator rho = random_density({2, 2}, 4);
  ShotOptions opts;
  opts.shots = static_cast<std::uint64_t>(state.range(0));
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(detect_shots(rho, n, w, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Shots)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Seesaw(benchmark::State& state) {
  const Witness w = choi_witness();
  SeesawOptions opts;
  opts.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sep_floor_estimate(w, opts));
}
BENCHMARK(BM_Seesaw)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ChoiSearch(benchmark::State& state) {
  ChoiSearchOptions opts;
  opts.resolution = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_choi_detected_ppt(opts));
}
BENCHMARK(BM_ChoiSearch)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
