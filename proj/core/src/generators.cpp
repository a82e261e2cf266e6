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


#include "gapcover/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/random/uniform_int_distribution.hpp>

#include "gapcover/errors.hpp"

namespace gapcover {
namespace {

using Engine = std::mt19937_64;

std::size_t Uniform(Engine& rng, std::size_t lo, std::size_t hi) {
  return boost::random::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Fisher-Yates with the portable distribution, so outputs do not depend on
// the standard library implementation.
template <typename T>
void Shuffle(std::vector<T>& v, Engine& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[Uniform(rng, 0, i - 1)]);
  }
}

std::vector<std::size_t> Iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

IndexSet RandomSubset(Engine& rng, const std::vector<std::size_t>& pool,
                      std::size_t size) {
  auto shuffled = pool;
  Shuffle(shuffled, rng);
  IndexSet out(shuffled.begin(), shuffled.begin() + size);
  std::sort(out.begin(), out.end());
  return out;
}

// Splits `items` (shuffled) into `parts` non-empty blocks.
std::vector<IndexSet> RandomPartition(Engine& rng,
                                      std::vector<std::size_t> items,
                                      std::size_t parts) {
  Shuffle(items, rng);
  auto cuts = RandomSubset(rng, Iota(items.size() - 1), parts - 1);
  for (auto& c : cuts) ++c;
  cuts.push_back(items.size());
  std::vector<IndexSet> blocks;
  std::size_t start = 0;
  for (std::size_t end : cuts) {
    IndexSet b(items.begin() + start, items.begin() + end);
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
    start = end;
  }
  return blocks;
}

[[noreturn]] void Infeasible(const std::string& message) {
  throw Error(ErrorKind::kInfeasibleParameters, message);
}

void RequireSetCoverRange(std::size_t m, const GapParams& params) {
  if (!params.SetCoverRangeHolds(m)) {
    throw Error(ErrorKind::kParameterOutOfRange,
                "d = " + std::to_string(params.d()) +
                    " violates d > 2m/(3 eta - 1) for m = " + std::to_string(m));
  }
}

void RequireHypergraphRange(std::size_t n, const GapParams& params) {
  if (!params.HypergraphRangeHolds(n)) {
    throw Error(ErrorKind::kParameterOutOfRange,
                "d = " + std::to_string(params.d()) +
                    " violates d > n/(2 eta) for n = " + std::to_string(n));
  }
}

constexpr int kAttempts = 16;

}  // namespace

SetCoverInstance PlantYesSetCover(std::size_t n, std::size_t m, std::size_t d,
                                  std::uint64_t seed) {
  Engine rng(seed);
  const std::size_t planted = Uniform(rng, 1, std::min({d, n, m}));
  std::vector<IndexSet> sets = RandomPartition(rng, Iota(n), planted);
  const auto universe = Iota(n);
  while (sets.size() < m) {
    sets.push_back(RandomSubset(rng, universe, Uniform(rng, 1, n)));
  }
  Shuffle(sets, rng);
  return SetCoverInstance::Create(n, std::move(sets));
}

SetCoverInstance GenerateYesSetCover(std::size_t n, std::size_t m,
                                     const GapParams& params,
                                     std::uint64_t seed,
                                     const OracleOptions& oracle) {
  RequireSetCoverRange(m, params);
  if (n == 0 || m == 0) Infeasible("n and m must be positive");
  if (static_cast<std::size_t>(params.d()) > m) {
    Infeasible("d must not exceed m");
  }
  auto inst = PlantYesSetCover(n, m, static_cast<std::size_t>(params.d()), seed);
  if (!MinExactCoverSize(inst, params.d(), oracle).feasible()) {
    throw std::logic_error("planted exact cover not found by the oracle");
  }
  return inst;
}

SetCoverInstance GenerateNoSetCover(std::size_t n, std::size_t m,
                                    const GapParams& params,
                                    std::uint64_t seed,
                                    const OracleOptions& oracle) {
  RequireSetCoverRange(m, params);
  const Rational eta_d = params.eta_d();
  if (eta_d >= m) {
    Infeasible("eta * d >= m: no cover can exceed eta * d sets");
  }
  if (eta_d >= n) {
    Infeasible("eta * d >= n: some cover has at most n sets");
  }
  // p sets each own at least one private element, so every cover has at
  // least p sets.
  const auto p_lo =
      static_cast<std::size_t>(Floor(eta_d).convert_to<std::int64_t>()) + 1;
  const std::size_t p_hi = std::min(m, n);

  Engine rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::size_t p = Uniform(rng, p_lo, p_hi);
    const std::size_t pool_size = Uniform(rng, 0, n - p);
    auto elements = Iota(n);
    Shuffle(elements, rng);
    std::vector<std::size_t> pool(elements.begin(), elements.begin() + pool_size);
    std::vector<std::size_t> privates(elements.begin() + pool_size, elements.end());

    std::vector<IndexSet> sets = RandomPartition(rng, privates, p);
    for (auto& s : sets) {
      if (pool.empty()) break;
      auto extra = RandomSubset(rng, pool, Uniform(rng, 0, pool.size()));
      s.insert(s.end(), extra.begin(), extra.end());
    }
    while (sets.size() < m) {
      if (pool.empty()) {
        sets.push_back(sets[Uniform(rng, 0, p - 1)]);
      } else {
        sets.push_back(RandomSubset(rng, pool, Uniform(rng, 1, pool.size())));
      }
    }
    for (std::size_t u : pool) {
      bool covered = std::any_of(sets.begin(), sets.end(), [u](const IndexSet& s) {
        return std::find(s.begin(), s.end(), u) != s.end();
      });
      if (!covered) sets[Uniform(rng, 0, m - 1)].push_back(u);
    }
    for (auto& s : sets) std::sort(s.begin(), s.end());
    Shuffle(sets, rng);

    auto inst = SetCoverInstance::Create(n, std::move(sets));
    if (Rational(*MinCoverSize(inst, oracle).optimum) > eta_d) return inst;
  }
  Infeasible("could not confirm a minimum cover above eta * d");
}

HypergraphInstance GenerateYesHypergraph(std::size_t n, std::size_t k,
                                         std::size_t m, const GapParams& params,
                                         std::uint64_t seed,
                                         const OracleOptions& oracle) {
  RequireHypergraphRange(n, params);
  if (k < 2) Infeasible("k must be at least 2");
  if (n < k) Infeasible("fewer than k vertices");
  Engine rng(seed);
  const std::size_t t =
      Uniform(rng, 1, std::min<std::size_t>(static_cast<std::size_t>(params.d()),
                                            n - k + 1));
  auto vertices = Iota(n);
  Shuffle(vertices, rng);
  std::vector<std::size_t> planted(vertices.begin(), vertices.begin() + t);
  std::vector<std::size_t> others(vertices.begin() + t, vertices.end());

  std::vector<IndexSet> edges;
  while (edges.size() < m) {
    IndexSet e = RandomSubset(rng, others, k - 1);
    e.push_back(planted[Uniform(rng, 0, t - 1)]);
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  auto inst = HypergraphInstance::Create(n, k, std::move(edges));
  if (!HasExactVertexCover(inst, params.d(), oracle).feasible()) {
    throw std::logic_error("planted exact vertex cover not found by the oracle");
  }
  return inst;
}

namespace {

std::size_t Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All k-subsets of `block`, in lexicographic order of positions.
void AppendCompleteEdges(const std::vector<std::size_t>& block, std::size_t k,
                         std::vector<IndexSet>& out) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    IndexSet e;
    for (std::size_t i : pick) e.push_back(block[i]);
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == block.size() - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

HypergraphInstance GenerateNoHypergraph(std::size_t n, std::size_t k,
                                        std::size_t m, const GapParams& params,
                                        std::uint64_t seed,
                                        const OracleOptions& oracle) {
  RequireHypergraphRange(n, params);
  if (k < 2) Infeasible("k must be at least 2");
  const Rational eta_d = params.eta_d();
  // A complete k-uniform block on a vertices needs a - k + 1 cover vertices.
  const auto target =
      static_cast<std::size_t>(Floor(eta_d).convert_to<std::int64_t>()) + 1;
  if (n < k || target > n - k + 1) {
    Infeasible("eta * d >= n - k + 1: some vertex cover is small enough");
  }

  // Balanced block sizes minimize the edge count for a given block count.
  std::vector<std::size_t> best_sizes;
  std::size_t best_edges = 0;
  for (std::size_t blocks = 1; blocks <= target; ++blocks) {
    const std::size_t used = target + blocks * (k - 1);
    if (used > n) break;
    std::vector<std::size_t> sizes(blocks, used / blocks);
    for (std::size_t i = 0; i < used % blocks; ++i) ++sizes[i];
    std::size_t edges = 0;
    for (std::size_t a : sizes) edges += Binomial(a, k);
    if (best_sizes.empty() || edges < best_edges) {
      best_sizes = sizes;
      best_edges = edges;
    }
  }
  if (best_edges > m) {
    Infeasible("at least " + std::to_string(best_edges) +
               " edges are needed to force a vertex cover above eta * d");
  }

  Engine rng(seed);
  auto vertices = Iota(n);
  const auto all = vertices;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Shuffle(vertices, rng);
    std::vector<IndexSet> edges;
    std::size_t start = 0;
    for (std::size_t a : best_sizes) {
      std::vector<std::size_t> block(vertices.begin() + start,
                                     vertices.begin() + start + a);
      std::sort(block.begin(), block.end());
      AppendCompleteEdges(block, k, edges);
      start += a;
    }
    while (edges.size() < m) edges.push_back(RandomSubset(rng, all, k));
    Shuffle(edges, rng);
    auto inst = HypergraphInstance::Create(n, k, std::move(edges));
    if (Rational(*MinVertexCoverSize(inst, oracle).optimum) > eta_d) return inst;
  }
  Infeasible("could not confirm a minimum vertex cover above eta * d");
}

}  // namespace gapcover
