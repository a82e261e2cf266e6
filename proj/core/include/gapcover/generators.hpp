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

#include "gapcover/instances.hpp"
#include "gapcover/oracle.hpp"

namespace gapcover {

// Seeded promise-instance generators. Each output is re-checked with the
// oracle before it is returned. Range-predicate failures throw
// kParameterOutOfRange; size combinations admitting no promise instance
// throw kInfeasibleParameters.

// Plants an exact cover of at most d disjoint sets plus distractor subsets.
SetCoverInstance GenerateYesSetCover(std::size_t n, std::size_t m,
                                     const GapParams& params,
                                     std::uint64_t seed,
                                     const OracleOptions& oracle = {});

// Every cover needs more than eta * d sets. Requires eta * d < m and
// eta * d < n.
SetCoverInstance GenerateNoSetCover(std::size_t n, std::size_t m,
                                    const GapParams& params,
                                    std::uint64_t seed,
                                    const OracleOptions& oracle = {});

// k-uniform hypergraph with m edges, each meeting a planted vertex set of
// size <= d in exactly one vertex.
HypergraphInstance GenerateYesHypergraph(std::size_t n, std::size_t k,
                                         std::size_t m, const GapParams& params,
                                         std::uint64_t seed,
                                         const OracleOptions& oracle = {});

// Disjoint complete k-uniform blocks force a vertex cover above eta * d;
// remaining edges are random.
HypergraphInstance GenerateNoHypergraph(std::size_t n, std::size_t k,
                                        std::size_t m, const GapParams& params,
                                        std::uint64_t seed,
                                        const OracleOptions& oracle = {});

// Same construction as GenerateYesSetCover without parameter checks or
// oracle verification; for timing runs beyond the oracle's reach.
SetCoverInstance PlantYesSetCover(std::size_t n, std::size_t m,
                                  std::size_t d, std::uint64_t seed);

}  // namespace gapcover
