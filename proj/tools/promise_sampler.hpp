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

#include <cstdint>
#include <random>
#include <string>

#include "gapcover/instances.hpp"
#include "gapcover/oracle.hpp"

namespace gapcover::cli {

enum class Family { kYesSetCover, kNoSetCover, kYesHypergraph, kNoHypergraph };

std::string FamilyName(Family f);

struct SamplerLimits {
  std::size_t max_n = 12;
  std::size_t max_m = 12;
};

struct SampledInstance {
  Family family;
  PromiseInstance instance;
  std::uint64_t seed;  // generator seed that produced it
};

// Draws an in-range promise instance of the given family with eta in
// {3/2, 2, 3}; parameter draws that admit no instance are redrawn.
SampledInstance SamplePromiseInstance(Family family, std::mt19937_64& rng,
                                      const SamplerLimits& limits,
                                      const OracleOptions& oracle = {});

}  // namespace gapcover::cli
