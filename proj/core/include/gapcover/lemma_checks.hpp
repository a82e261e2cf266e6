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
#include <map>
#include <string>
#include <vector>

#include "gapcover/distinguisher.hpp"
#include "gapcover/instances.hpp"
#include "gapcover/oracle.hpp"

namespace gapcover {

// Identifiers for the structural facts the distinguishers rely on.
namespace lemma {
// YES hypergraph: k * chi(V') - 1 is a kernel vector with full support.
inline constexpr const char* kFullSupportVector = "full_support_kernel_vector";
// NO instance: every kernel basis vector has support <= 2(dim - eta d).
inline constexpr const char* kSupportBound = "kernel_support_bound";
// NO instance: the union of basis supports has size <= 2(dim - eta d).
inline constexpr const char* kSupportConfinement = "support_union_confinement";
// YES set cover reaching Step 4: squared projection norm <= d, and
// (x0, -1) lies in L(B') for the oracle's exact cover x0.
inline constexpr const char* kProjectionBound = "projection_norm_bound";
// d > 2m/(3 eta - 1) implies eta d - 2(m - eta d) > d.
inline constexpr const char* kThreshold = "threshold_inequality";
// Verdict equals the oracle classification.
inline constexpr const char* kAgreement = "oracle_agreement";
}  // namespace lemma

struct LemmaViolation {
  std::string lemma;
  std::string detail;
  IntVector witness;
};

struct LemmaReport {
  std::map<std::string, std::size_t> checks;  // lemma id -> checks evaluated
  std::vector<LemmaViolation> violations;

  bool ok() const { return violations.empty(); }
  void Merge(const LemmaReport& other);
};

// Evaluates every check that applies to the instance given its oracle
// classification. Neither-class instances only get the threshold check.
LemmaReport CheckLemmas(const PromiseInstance& inst,
                        const Classification& classification);

}  // namespace gapcover
