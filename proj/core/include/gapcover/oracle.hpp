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


#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gapcover/instances.hpp"

namespace gapcover {

// Exhaustive searches that serve as ground truth for small instances.
struct OracleOptions {
  std::uint64_t node_budget = 50'000'000;
  // Size gates; must not exceed 64 (searches use 64-bit masks).
  std::size_t max_universe = 20;
  std::size_t max_sets = 20;
  std::size_t max_vertices = 24;
};

struct OracleResult {
  std::optional<std::int64_t> optimum;  // nullopt: no feasible solution
  IndexSet witness;                     // set, or vertex, indices
  std::uint64_t nodes_explored = 0;

  bool feasible() const { return optimum.has_value(); }
};

// Fewest pairwise-disjoint sets covering the universe, considering sizes up
// to `limit`. Throws kBudgetExceeded.
OracleResult MinExactCoverSize(const SetCoverInstance& inst, std::int64_t limit,
                               const OracleOptions& options = {});

// Fewest sets covering the universe.
OracleResult MinCoverSize(const SetCoverInstance& inst,
                          const OracleOptions& options = {});

// Smallest vertex set meeting every edge.
OracleResult MinVertexCoverSize(const HypergraphInstance& inst,
                                const OracleOptions& options = {});

// Smallest vertex set of size <= d meeting every edge in exactly one vertex.
OracleResult HasExactVertexCover(const HypergraphInstance& inst, std::int64_t d,
                                 const OracleOptions& options = {});

enum class PromiseClass { kYes, kNo, kNeither };

std::string_view PromiseClassName(PromiseClass c);

struct Classification {
  PromiseClass kind = PromiseClass::kNeither;
  OracleResult exact;    // exact cover (or exact vertex cover) search, limit d
  OracleResult minimum;  // minimum cover (or vertex cover); run only when
                         // the exact search fails
};

// YES: an exact cover of size <= d exists. NO: every cover is larger than
// eta * d.
Classification ClassifySetCover(const SetCoverInstance& inst,
                                const GapParams& params,
                                const OracleOptions& options = {});
Classification ClassifyHypergraph(const HypergraphInstance& inst,
                                  const GapParams& params,
                                  const OracleOptions& options = {});
Classification Classify(const PromiseInstance& inst,
                        const OracleOptions& options = {});

// Feasibility checks used to validate witnesses.
bool IsCover(const SetCoverInstance& inst, const IndexSet& chosen);
bool IsExactCover(const SetCoverInstance& inst, const IndexSet& chosen);
bool IsVertexCover(const HypergraphInstance& inst, const IndexSet& chosen);
bool IsExactVertexCover(const HypergraphInstance& inst, const IndexSet& chosen);

}  // namespace gapcover
