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


#include "gapcover/distinguisher.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>

#include "gapcover/errors.hpp"
#include "gapcover/lattice.hpp"

namespace gapcover {

namespace {

// L(B) together with the Step 4 vector of L(B'), from one elimination.
// The kernel of B' is computed in reversed coordinates, so its canonical
// form starts with the row whose pivot is the appended coordinate (when one
// exists); that row, read forwards, is the first vector of L(B') outside
// L(B), and the remaining rows span L(B) x {0}.
struct ExtendedKernel {
  LatticeBasis kernel;
  std::optional<IntVector> outside;
};

ExtendedKernel SplitExtendedKernel(const IntMatrix& b) {
  const std::size_t m = b.cols();
  IntMatrix reversed(b.rows(), m + 1);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    reversed(i, 0) = 1;
    for (std::size_t j = 0; j < m; ++j) reversed(i, j + 1) = b(i, m - 1 - j);
  }
  const LatticeBasis extended = KernelLatticeBasis(reversed);
  const auto& rows = extended.vectors();
  ExtendedKernel out;
  std::size_t first = 0;
  if (!rows.empty() && extended.pivot_columns().front() == 0) {
    out.outside = IntVector(rows.front().rbegin(), rows.front().rend());
    first = 1;
  }
  std::vector<IntVector> generators;
  for (std::size_t r = first; r < rows.size(); ++r) {
    assert(rows[r][0] == 0);
    generators.emplace_back(rows[r].rbegin(), rows[r].rend() - 1);
  }
  out.kernel = LatticeBasis::FromGenerators(m, generators);
  return out;
}

}  // namespace

std::string_view AnswerName(Answer a) {
  return a == Answer::kYes ? "YES" : "NO";
}

std::string_view DecisionStepName(DecisionStep s) {
  switch (s) {
    case DecisionStep::kStep2:
      return "step2";
    case DecisionStep::kStep3:
      return "step3";
    case DecisionStep::kStep4:
      return "step4";
    case DecisionStep::kNonzeroKernel:
      return "nonzero_kernel";
    case DecisionStep::kRationalWeight:
      return "rational_weight";
  }
  return "unknown";
}

Threshold Threshold::ForSetCover(const GapParams& params, std::size_t set_count) {
  if (!params.SetCoverRangeHolds(set_count)) {
    throw Error(ErrorKind::kParameterOutOfRange,
                "d = " + std::to_string(params.d()) +
                    " is not above 2m/(3 eta - 1) for m = " +
                    std::to_string(set_count));
  }
  const Rational eta_d = params.eta_d();
  const Rational m(set_count);
  if (!(eta_d - 2 * (m - eta_d) > params.d())) {
    throw std::logic_error("range predicate holds but eta d - 2(m - eta d) <= d");
  }
  return {Ceil(2 * eta_d - m), Integer(params.d())};
}

Threshold Threshold::ForHypergraph(const GapParams& params,
                                   std::size_t vertex_count) {
  if (!params.HypergraphRangeHolds(vertex_count)) {
    throw Error(ErrorKind::kParameterOutOfRange,
                "d = " + std::to_string(params.d()) +
                    " is not above n/(2 eta) for n = " +
                    std::to_string(vertex_count));
  }
  return {Ceil(2 * params.eta_d() - Rational(vertex_count)),
          Integer(params.d())};
}

Verdict DistinguishSetCover(const SetCoverInstance& inst,
                            const GapParams& params) {
  const std::size_t m = inst.set_count();
  const Threshold threshold = Threshold::ForSetCover(params, m);
  const IntMatrix b = BuildSetCoverIncidence(inst);

  // Step 1, with L(B') computed alongside for Step 3.
  ExtendedKernel split = SplitExtendedKernel(b);
  const LatticeBasis& kernel = split.kernel;

  // Step 2.
  const auto zeros = ZeroCoordinatePositions(kernel);
  Witness witness;
  witness.zero_positions = zeros.size();
  witness.zero_positions_required = threshold.zero_positions_required;
  witness.kernel_rank = kernel.rank();
  if (Integer(zeros.size()) < threshold.zero_positions_required) {
    return {Answer::kYes, DecisionStep::kStep2, std::move(witness)};
  }

  // Step 3.
  auto& x = split.outside;
  if (!x) return {Answer::kNo, DecisionStep::kStep3, std::move(witness)};

  // Step 4: drop the appended coordinate, project onto the zero positions.
  IntVector head(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(m));
  Integer norm_sq = ProjectionNormSq(head, zeros);
  const Answer answer =
      norm_sq > threshold.norm_sq_bound ? Answer::kNo : Answer::kYes;
  witness.vector = std::move(*x);
  witness.projection_norm_sq = std::move(norm_sq);
  witness.norm_sq_bound = threshold.norm_sq_bound;
  return {answer, DecisionStep::kStep4, std::move(witness)};
}

Verdict DistinguishHypergraphVc(const HypergraphInstance& inst,
                                const GapParams& params) {
  const Threshold threshold =
      Threshold::ForHypergraph(params, inst.vertex_count());
  const LatticeBasis kernel =
      KernelLatticeBasis(BuildHypergraphIncidence(inst));
  const auto zeros = ZeroCoordinatePositions(kernel);
  Witness witness;
  witness.zero_positions = zeros.size();
  witness.zero_positions_required = threshold.zero_positions_required;
  witness.kernel_rank = kernel.rank();
  const Answer answer =
      Integer(zeros.size()) >= threshold.zero_positions_required ? Answer::kNo
                                                                 : Answer::kYes;
  return {answer, DecisionStep::kStep2, std::move(witness)};
}

Verdict DistinguishZeroKernel(const SetCoverInstance& inst,
                              const GapParams& /*params*/) {
  const IntMatrix b = BuildSetCoverIncidence(inst);
  const LatticeBasis kernel = KernelLatticeBasis(b);
  Witness witness;
  witness.kernel_rank = kernel.rank();
  if (!kernel.is_zero()) {
    return {Answer::kYes, DecisionStep::kNonzeroKernel, std::move(witness)};
  }
  const IntVector ones(b.rows(), Integer(1));
  auto y = SolveRational(b, ones);
  if (!y) {
    throw Error(ErrorKind::kNoSolution,
                "B y = 1 has no rational solution and L(B) is zero");
  }
  const std::size_t weight = HammingWeight(*y);
  witness.hamming_weight = weight;
  witness.rational_solution = std::move(*y);
  const Answer answer = weight == inst.set_count() ? Answer::kNo : Answer::kYes;
  return {answer, DecisionStep::kRationalWeight, std::move(witness)};
}

Verdict Distinguish(const PromiseInstance& inst) {
  if (const auto* sc = std::get_if<SetCoverInstance>(&inst.instance)) {
    return DistinguishSetCover(*sc, inst.params);
  }
  return DistinguishHypergraphVc(std::get<HypergraphInstance>(inst.instance),
                                 inst.params);
}

}  // namespace gapcover
