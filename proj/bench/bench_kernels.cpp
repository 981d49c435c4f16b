// Copyright 2026 The gwcodes Authors
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

// Serial versus OpenMP kernels on the two hot loops: the exhaustive anticode
// filter and the profile computation over a chunk of enumerated codes.

#include <benchmark/benchmark.h>

#include "gwcodes/delsarte.hpp"
#include "gwcodes/kernels.hpp"
#include "gwcodes/linalg.hpp"
#include "gwcodes/oracle.hpp"

namespace {

namespace kernels = gw::kernels;

// Subspaces of Mat(2 x 3, F_2) of dimension 3 that are optimal anticodes.
template <bool Parallel>
void BM_AnticodeFilter(benchmark::State& state) {
  const auto f2 = gw::GaloisField::prime(2);
  const gw::SubspaceEnumerator subspaces(f2, 6, 3);
  const auto is_anticode = [&](std::uint64_t i) {
    return gw::oracle::scan_max_rank(subspaces.at(i), 2, 3, 1) == 1;
  };
  for (auto _ : state) {
    auto hits = Parallel ? kernels::filter_parallel(subspaces.count(), is_anticode)
                         : kernels::filter_serial(subspaces.count(), is_anticode);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * subspaces.count()));
}

// Delsarte profiles of the first `range(0)` six-dimensional codes in Mat(3 x 3, F_2).
template <bool Parallel>
void BM_ProfileChunk(benchmark::State& state) {
  const auto f2 = gw::GaloisField::prime(2);
  const gw::SubspaceEnumerator codes(f2, 9, 6);
  const gw::AnticodeCatalog catalog(f2, 3, 3);
  const auto count = static_cast<std::uint64_t>(state.range(0));
  const auto profile = [&](std::uint64_t i) { return catalog.weights(gw::DelsarteCode(3, 3, codes.at(i))).values; };
  for (auto _ : state) {
    auto out = Parallel ? kernels::map_parallel<std::vector<int>>(count, profile)
                        : kernels::map_serial<std::vector<int>>(count, profile);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}

}  // namespace

BENCHMARK(BM_AnticodeFilter<false>)->Name("anticode_filter/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnticodeFilter<true>)->Name("anticode_filter/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileChunk<false>)->Name("profile_chunk/serial")->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileChunk<true>)->Name("profile_chunk/parallel")->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
