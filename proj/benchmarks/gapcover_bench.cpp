// Copyright 2026 The gapcover Authors
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


#include <algorithm>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gapcover/distinguisher.hpp"
#include "gapcover/generators.hpp"
#include "gapcover/hermite.hpp"
#include "gapcover/lattice.hpp"

namespace gapcover {
namespace {

// Planted YES instance with n = m and the smallest in-range d at eta = 2.
PromiseInstance Ladder(std::size_t size) {
  const auto d = static_cast<std::int64_t>(2 * size / 5 + 1);
  return {PlantYesSetCover(size, size, static_cast<std::size_t>(d), size),
          GapParams::Create(d, Rational(2))};
}

void BM_KernelBasis(benchmark::State& state) {
  const auto inst = Ladder(static_cast<std::size_t>(state.range(0)));
  const IntMatrix b =
      BuildSetCoverIncidence(std::get<SetCoverInstance>(inst.instance));
  for (auto _ : state) benchmark::DoNotOptimize(KernelLatticeBasis(b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KernelBasis)->DenseRange(10, 100, 10)->Complexity();

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto inst = Ladder(static_cast<std::size_t>(state.range(0)));
  const IntMatrix b =
      BuildSetCoverIncidence(std::get<SetCoverInstance>(inst.instance));
  for (auto _ : state) benchmark::DoNotOptimize(HermiteNormalForm(b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermiteNormalForm)->DenseRange(10, 100, 10)->Complexity();

void BM_DistinguishSetCover(benchmark::State& state) {
  const auto inst = Ladder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Distinguish(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistinguishSetCover)->DenseRange(10, 100, 10)->Complexity();

// 3-uniform, n edges, each meeting the planted set {0, .., d-1} once.
PromiseInstance HypergraphLadder(std::size_t n) {
  const auto d = static_cast<std::int64_t>(n / 4 + 1);
  const auto planted = static_cast<std::size_t>(d);
  std::mt19937_64 rng(n);
  std::vector<IndexSet> edges;
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t a = rng() % planted;
    std::size_t b = planted + rng() % (n - planted);
    std::size_t c = planted + rng() % (n - planted);
    while (c == b) c = planted + rng() % (n - planted);
    edges.push_back({a, std::min(b, c), std::max(b, c)});
  }
  return {HypergraphInstance::Create(n, 3, edges),
          GapParams::Create(d, Rational(2))};
}

void BM_DistinguishHypergraph(benchmark::State& state) {
  const auto inst = HypergraphLadder(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Distinguish(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistinguishHypergraph)->DenseRange(10, 100, 10)->Complexity();

}  // namespace
}  // namespace gapcover
BENCHMARK_MAIN();
