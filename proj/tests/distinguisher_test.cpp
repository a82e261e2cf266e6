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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "gapcover/errors.hpp"
#include "gapcover/generators.hpp"
#include "gapcover/lattice.hpp"
#include "test_util.hpp"

namespace gapcover {
namespace {

using testing::BruteMinCover;
using testing::BruteMinVertexCover;
using testing::Vec;

SetCoverInstance FourSets() {
  return SetCoverInstance::Create(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
}

SetCoverInstance Singletons(std::size_t n) {
  std::vector<IndexSet> sets;
  for (std::size_t i = 0; i < n; ++i) sets.push_back({i});
  return SetCoverInstance::Create(n, sets);
}

TEST(ThresholdTest, SetCoverValues) {
  // 2 eta d - m = 8 - 4 = 4.
  auto t = Threshold::ForSetCover(GapParams::Create(2, Rational(2)), 4);
  EXPECT_EQ(t.zero_positions_required, 4);
  EXPECT_EQ(t.norm_sq_bound, 2);
  // 2 * 3 * 4 - 13 = 11.
  EXPECT_EQ(Threshold::ForSetCover(GapParams::Create(4, Rational(3)), 13)
                .zero_positions_required,
            11);
  // 2 * 7/5 * 2 - 4 = 1.6, rounded up.
  EXPECT_EQ(Threshold::ForHypergraph(GapParams::Create(2, Rational(7, 5)), 4)
                .zero_positions_required,
            2);
}

TEST(DistinguishSetCoverTest, FourSetYesAtStep2) {
  const auto params = GapParams::Create(2, Rational(2));
  EXPECT_EQ(BruteMinCover(FourSets(), true), 2);
  auto v = DistinguishSetCover(FourSets(), params);
  EXPECT_EQ(v.answer, Answer::kYes);
  EXPECT_EQ(v.decided_at, DecisionStep::kStep2);
  EXPECT_EQ(v.witness.zero_positions, 0u);
  EXPECT_EQ(v.witness.zero_positions_required, 4);
  EXPECT_EQ(KernelLatticeBasis(BuildSetCoverIncidence(FourSets())).vectors(),
            std::vector<IntVector>{Vec({1, 1, -1, -1})});
}

TEST(DistinguishSetCoverTest, ThirteenSingletonsNoAtStep4) {
  const auto params = GapParams::Create(4, Rational(3));
  EXPECT_EQ(BruteMinCover(Singletons(13), false), 13);
  auto v = DistinguishSetCover(Singletons(13), params);
  EXPECT_EQ(v.answer, Answer::kNo);
  EXPECT_EQ(v.decided_at, DecisionStep::kStep4);
  EXPECT_EQ(v.witness.zero_positions, 13u);
  EXPECT_EQ(v.witness.projection_norm_sq, 13);
  IntVector expected(13, Integer(-1));
  expected.push_back(1);
  EXPECT_EQ(v.witness.vector, expected);
}

TEST(DistinguishSetCoverTest, RangeGate) {
  try {
    // 2 > 2 * 5 / 5 fails.
    DistinguishSetCover(SetCoverInstance::Create(4, {{0}, {1}, {2}, {3}, {0, 1}}),
                        GapParams::Create(2, Rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParameterOutOfRange);
  }
}

TEST(DistinguishSetCoverTest, Step3WhenOnesColumnAddsNothing) {
  // B x = -t 1 forces t = 0, so L(B') is the embedded L(B) = 0.
  auto inst = SetCoverInstance::Create(3, {{0, 1}, {1, 2}});
  auto v = DistinguishSetCover(inst, GapParams::Create(1, Rational(2)));
  EXPECT_EQ(v.answer, Answer::kNo);
  EXPECT_EQ(v.decided_at, DecisionStep::kStep3);
  EXPECT_EQ(v.witness.zero_positions, 2u);
  EXPECT_EQ(v.witness.zero_positions_required, 2);
}

TEST(DistinguishSetCoverTest, ExtendedKernelCanNeedEvenLastCoordinate) {
  // B y = 1 forces y = (1/2, 1/2, 1/2), so L(B') is generated by
  // (1, 1, 1, -2) and the Step 4 vector carries last coordinate 2.
  auto inst = SetCoverInstance::Create(3, {{0, 1}, {1, 2}, {0, 2}});
  auto b = BuildSetCoverIncidence(inst);
  EXPECT_TRUE(KernelLatticeBasis(b).is_zero());
  auto ext = KernelLatticeBasis(AppendOnesColumn(b));
  EXPECT_EQ(ext.vectors(), std::vector<IntVector>{Vec({1, 1, 1, -2})});
  auto x = LatticeDifferenceVector(ext, KernelLatticeBasis(b));
  EXPECT_EQ(x, Vec({-1, -1, -1, 2}));
}

TEST(DistinguishHypergraphTest, PathYes) {
  auto path = HypergraphInstance::Create(4, 2, {{0, 1}, {1, 2}, {2, 3}});
  const auto params = GapParams::Create(2, Rational(2));
  EXPECT_EQ(BruteMinVertexCover(path, true), 2);
  auto v = DistinguishHypergraphVc(path, params);
  EXPECT_EQ(v.answer, Answer::kYes);
  EXPECT_EQ(v.witness.zero_positions, 0u);
  auto kernel = KernelLatticeBasis(BuildHypergraphIncidence(path));
  EXPECT_EQ(kernel.vectors(), std::vector<IntVector>{Vec({1, -1, 1, -1})});
  // 2 * chi({1, 3}) - 1.
  IntVector lifted = Vec({-1, 1, -1, 1});
  EXPECT_TRUE(IsZero(BuildHypergraphIncidence(path).Multiply(lifted)));
  EXPECT_TRUE(kernel.Contains(lifted));
}

TEST(DistinguishHypergraphTest, K4No) {
  auto k4 = HypergraphInstance::Create(
      4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto params = GapParams::Create(2, Rational(7, 5));
  EXPECT_EQ(BruteMinVertexCover(k4, false), 3);
  auto v = DistinguishHypergraphVc(k4, params);
  EXPECT_EQ(v.answer, Answer::kNo);
  EXPECT_EQ(v.witness.zero_positions, 4u);
  EXPECT_EQ(v.witness.kernel_rank, 0u);
}

TEST(DistinguishHypergraphTest, RangeGate) {
  auto path = HypergraphInstance::Create(4, 2, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_THROW(DistinguishHypergraphVc(path, GapParams::Create(1, Rational(2))),
               Error);
}

TEST(DistinguishZeroKernelTest, SingletonsNo) {
  auto v = DistinguishZeroKernel(Singletons(13), GapParams::Create(4, Rational(3)));
  EXPECT_EQ(v.answer, Answer::kNo);
  EXPECT_EQ(v.decided_at, DecisionStep::kRationalWeight);
  EXPECT_EQ(v.witness.hamming_weight, 13u);
  EXPECT_EQ(v.witness.rational_solution, RationalVector(13, Rational(1)));
}

TEST(DistinguishZeroKernelTest, NonzeroKernelYes) {
  auto v = DistinguishZeroKernel(FourSets(), GapParams::Create(2, Rational(2)));
  EXPECT_EQ(v.answer, Answer::kYes);
  EXPECT_EQ(v.decided_at, DecisionStep::kNonzeroKernel);
}

TEST(DistinguishZeroKernelTest, WeightBelowMIsYes) {
  // Columns independent; B y = 1 is solved by y = (1, 1, 0).
  auto inst = SetCoverInstance::Create(3, {{0}, {1, 2}, {0, 1}});
  auto v = DistinguishZeroKernel(inst, GapParams::Create(1, Rational(2)));
  EXPECT_EQ(v.answer, Answer::kYes);
  EXPECT_EQ(v.witness.hamming_weight, 2u);
}

TEST(DistinguishZeroKernelTest, InconsistentSystem) {
  // Independent columns; rows force y0 = 1, y0 + y2 = 1 and y2 = 1.
  auto inst = SetCoverInstance::Create(4, {{0, 1}, {2}, {1, 3}});
  ASSERT_TRUE(KernelLatticeBasis(BuildSetCoverIncidence(inst)).is_zero());
  try {
    DistinguishZeroKernel(inst, GapParams::Create(1, Rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoSolution);
  }
}

TEST(DistinguisherTest, Deterministic) {
  const auto params = GapParams::Create(5, Rational(2));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = GenerateYesSetCover(9, 12, params, seed);
    EXPECT_EQ(DistinguishSetCover(inst, params), DistinguishSetCover(inst, params));
  }
}

TEST(DistinguisherTest, AgreesWithEnumerationOnGeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    for (Rational eta : {Rational(3, 2), Rational(2), Rational(3)}) {
      const std::size_t m = 5 + seed % 8;
      const std::size_t n = 4 + (seed * 3) % 9;
      for (std::int64_t d = 1; d <= static_cast<std::int64_t>(m); ++d) {
        const auto params = GapParams::Create(d, eta);
        if (!params.SetCoverRangeHolds(m)) continue;
        auto yes = GenerateYesSetCover(n, m, params, seed);
        ASSERT_LE(BruteMinCover(yes, true), d);
        EXPECT_EQ(DistinguishSetCover(yes, params).answer, Answer::kYes);
        if (params.eta_d() < m && params.eta_d() < n) {
          auto no = GenerateNoSetCover(n, m, params, seed);
          EXPECT_EQ(DistinguishSetCover(no, params).answer, Answer::kNo);
        }
      }
    }
  }
}

// The procedure derives L(B) and the Step 4 vector from one kernel
// computation; compare against the two separate kernels.
TEST(DistinguisherTest, MatchesSeparateKernelComputation) {
  std::mt19937_64 rng(17);
  int step4 = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 9;
    const std::size_t m = 2 + rng() % 9;
    std::vector<IndexSet> sets;
    std::vector<bool> covered(n, false);
    for (std::size_t j = 0; j < m; ++j) {
      IndexSet s;
      for (std::size_t e = 0; e < n; ++e)
        if (rng() % 3 == 0) s.push_back(e);
      if (s.empty()) s.push_back(rng() % n);
      for (std::size_t e : s) covered[e] = true;
      sets.push_back(s);
    }
    for (std::size_t e = 0; e < n; ++e)
      if (!covered[e]) sets.back().push_back(e);
    for (auto& s : sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    const auto inst =
        t % 2 == 0 ? SetCoverInstance::Create(n, sets)
                   : PlantYesSetCover(n, m, 1 + rng() % std::min(n, m), rng());
    // Smallest d with d > 2m / (3 eta - 1) = 16m / 19.
    const auto params =
        GapParams::Create(static_cast<std::int64_t>(16 * m / 19 + 1), Rational(9, 8));
    const auto b = BuildSetCoverIncidence(inst);
    const auto kernel = KernelLatticeBasis(b);
    const auto v = DistinguishSetCover(inst, params);
    EXPECT_EQ(v.witness.kernel_rank, kernel.rank());
    EXPECT_EQ(v.witness.zero_positions, ZeroCoordinatePositions(kernel).size());
    if (v.decided_at == DecisionStep::kStep2) continue;
    const auto x =
        LatticeDifferenceVector(KernelLatticeBasis(AppendOnesColumn(b)), kernel);
    if (v.decided_at == DecisionStep::kStep3) {
      EXPECT_FALSE(x.has_value());
    } else {
      ++step4;
      EXPECT_EQ(v.witness.vector, x);
    }
  }
  EXPECT_GT(step4, 0);
}

}  // namespace
}  // namespace gapcover
