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
#include <optional>
#include <string_view>

#include "gapcover/instances.hpp"
#include "gapcover/int_matrix.hpp"
#include "gapcover/rational_solve.hpp"

namespace gapcover {

enum class Answer { kYes, kNo };

// Which step of which procedure produced a verdict.
enum class DecisionStep {
  kStep2,          // zero-position count against the threshold
  kStep3,          // L(B') equals the embedded L(B)
  kStep4,          // projection norm of a vector in L(B') outside L(B)
  kNonzeroKernel,  // zero-kernel shortcut: L(B) != 0
  kRationalWeight  // zero-kernel shortcut: Hamming weight of B y = 1
};

std::string_view AnswerName(Answer a);
std::string_view DecisionStepName(DecisionStep s);

// Evidence attached to a verdict; which fields are set depends on the step.
struct Witness {
  std::optional<std::size_t> zero_positions;
  std::optional<Integer> zero_positions_required;
  std::optional<IntVector> vector;  // Step 4: the full vector of L(B')
  std::optional<Integer> projection_norm_sq;
  std::optional<Integer> norm_sq_bound;
  std::optional<std::size_t> kernel_rank;
  std::optional<RationalVector> rational_solution;
  std::optional<std::size_t> hamming_weight;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Answer answer;
  DecisionStep decided_at;
  Witness witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Integer forms of the thresholds the procedures compare against.
struct Threshold {
  // ceil(2 eta d - dim); "count >= 2 eta d - dim" iff count >= this value.
  Integer zero_positions_required;
  Integer norm_sq_bound;  // d

  // dim = m. Throws kParameterOutOfRange unless d > 2m/(3 eta - 1). Checks
  // eta d - 2(m - eta d) > d, which the range predicate implies.
  static Threshold ForSetCover(const GapParams& params, std::size_t set_count);
  // dim = n. Throws kParameterOutOfRange unless d > n/(2 eta).
  static Threshold ForHypergraph(const GapParams& params,
                                 std::size_t vertex_count);
};

// Four-step lattice procedure for the set-cover promise problem. The answer
// is only meaningful on promise instances.
Verdict DistinguishSetCover(const SetCoverInstance& inst,
                            const GapParams& params);

// Two-step procedure for k-uniform hypergraph vertex cover.
Verdict DistinguishHypergraphVc(const HypergraphInstance& inst,
                                const GapParams& params);

// L(B) != 0 answers YES. Otherwise solve B y = 1: NO when every coordinate
// of y is nonzero, YES otherwise. Throws kNoSolution when B y = 1 has no
// rational solution. Applies no range check.
Verdict DistinguishZeroKernel(const SetCoverInstance& inst,
                              const GapParams& params);

// Dispatches on the instance type.
Verdict Distinguish(const PromiseInstance& inst);

}  // namespace gapcover
