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


#include "gapcover/instances.hpp"

#include <random>

#include <gtest/gtest.h>

#include "gapcover/errors.hpp"

namespace gapcover {
namespace {

ErrorKind KindOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kNoSolution;
}

HypergraphInstance Path4() {
  return HypergraphInstance::Create(4, 2, {{0, 1}, {1, 2}, {2, 3}});
}

HypergraphInstance K4() {
  return HypergraphInstance::Create(4, 2,
                                    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST(SetCoverIncidenceTest, SingleCoveringSet) {
  auto inst = SetCoverInstance::Create(3, {{0, 1, 2}});
  EXPECT_EQ(BuildSetCoverIncidence(inst), (IntMatrix{{1}, {1}, {1}}));
}

TEST(SetCoverIncidenceTest, FourSets) {
  auto inst = SetCoverInstance::Create(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  EXPECT_EQ(BuildSetCoverIncidence(inst),
            (IntMatrix{{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
}

TEST(SetCoverIncidenceTest, SingletonsGiveIdentity) {
  std::vector<IndexSet> sets;
  for (std::size_t i = 0; i < 13; ++i) sets.push_back({i});
  EXPECT_EQ(BuildSetCoverIncidence(SetCoverInstance::Create(13, sets)),
            IntMatrix::Identity(13));
}

TEST(SetCoverIncidenceTest, ColumnsReproduceSets) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t m = 1 + rng() % 10;
    std::vector<IndexSet> sets(m);
    for (std::size_t u = 0; u < n; ++u) sets[rng() % m].push_back(u);
    for (auto& s : sets) {
      if (s.empty()) s.push_back(rng() % n);
    }
    auto inst = SetCoverInstance::Create(n, sets);
    auto b = BuildSetCoverIncidence(inst);
    for (std::size_t j = 0; j < m; ++j) {
      IndexSet support;
      for (std::size_t u = 0; u < n; ++u)
        if (b(u, j) == 1) support.push_back(u);
      EXPECT_FALSE(support.empty());
      EXPECT_EQ(support, inst.sets()[j]);
    }
  }
}

TEST(SetCoverInstanceTest, RejectsInvalid) {
  EXPECT_EQ(KindOf([] { SetCoverInstance::Create(3, {{0, 1}}); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(KindOf([] { SetCoverInstance::Create(2, {{0, 2}}); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(KindOf([] { SetCoverInstance::Create(2, {{0, 1}, {}}); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(KindOf([] { SetCoverInstance::Create(2, {{0, 0, 1}}); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(KindOf([] { SetCoverInstance::Create(1, {}); }),
            ErrorKind::kInvariantViolation);
}

TEST(SetCoverInstanceTest, UncoveredElementsAreNamed) {
  try {
    SetCoverInstance::Create(5, {{0, 2}, {4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("1, 3"), std::string::npos) << e.what();
  }
}

TEST(SetCoverInstanceTest, DuplicatesAllowedAndSetsSorted) {
  auto inst = SetCoverInstance::Create(3, {{2, 0, 1}, {0, 1, 2}});
  EXPECT_EQ(inst.sets()[0], (IndexSet{0, 1, 2}));
}

TEST(HypergraphIncidenceTest, Path) {
  EXPECT_EQ(BuildHypergraphIncidence(Path4()),
            (IntMatrix{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
}

TEST(HypergraphIncidenceTest, CompleteGraph) {
  auto b = BuildHypergraphIncidence(K4());
  ASSERT_EQ(b.rows(), 6u);
  ASSERT_EQ(b.cols(), 4u);
  for (std::size_t j = 0; j < 4; ++j) {
    Integer col = 0;
    for (std::size_t i = 0; i < 6; ++i) col += b(i, j);
    EXPECT_EQ(col, 3);
  }
}

TEST(HypergraphIncidenceTest, RowSumsEqualUniformity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    const std::size_t k = 2 + rng() % (n - 2);
    std::vector<IndexSet> edges;
    for (std::size_t e = 0; e < 1 + rng() % 10; ++e) {
      std::vector<std::size_t> vs(n);
      for (std::size_t i = 0; i < n; ++i) vs[i] = i;
      std::shuffle(vs.begin(), vs.end(), rng);
      edges.emplace_back(vs.begin(), vs.begin() + static_cast<long>(k));
    }
    auto inst = HypergraphInstance::Create(n, k, edges);
    auto b = BuildHypergraphIncidence(inst);
    auto prod = b.Multiply(IntVector(n, Integer(1)));
    EXPECT_EQ(prod, IntVector(inst.edge_count(), Integer(k)));
  }
}

TEST(HypergraphInstanceTest, RejectsInvalid) {
  EXPECT_EQ(KindOf([] { HypergraphInstance::Create(3, 2, {{0, 1, 2}}); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(KindOf([] { HypergraphInstance::Create(3, 2, {{0, 3}}); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(KindOf([] { HypergraphInstance::Create(3, 1, {{0}}); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(KindOf([] { HypergraphInstance::Create(3, 2, {{1, 1}}); }),
            ErrorKind::kInvariantViolation);
}

TEST(GapParamsTest, RangePredicatesAreExact) {
  // d > 2m/(3 eta - 1): 2 > 8/5.
  auto p = GapParams::Create(2, Rational(2));
  EXPECT_TRUE(p.SetCoverRangeHolds(4));
  EXPECT_FALSE(p.SetCoverRangeHolds(5));  // 2 > 10/5 fails at equality
  // 4 > 26/8.
  EXPECT_TRUE(GapParams::Create(4, Rational(3)).SetCoverRangeHolds(13));
  // d > n/(2 eta): 2 > 4/4, and 2 > 4/(14/5).
  EXPECT_TRUE(p.HypergraphRangeHolds(4));
  EXPECT_TRUE(GapParams::Create(2, Rational(7, 5)).HypergraphRangeHolds(4));
  EXPECT_FALSE(GapParams::Create(1, Rational(2)).HypergraphRangeHolds(4));
}

TEST(GapParamsTest, RejectsEtaAtMostOneAndNonPositiveD) {
  EXPECT_EQ(KindOf([] { GapParams::Create(1, Rational(1)); }),
            ErrorKind::kParameterOutOfRange);
  EXPECT_EQ(KindOf([] { GapParams::Create(0, Rational(2)); }),
            ErrorKind::kParameterOutOfRange);
}

TEST(RationalRoundingTest, CeilAndFloor) {
  EXPECT_EQ(Ceil(Rational(8, 5)), 2);
  EXPECT_EQ(Ceil(Rational(-8, 5)), -1);
  EXPECT_EQ(Ceil(Rational(4)), 4);
  EXPECT_EQ(Floor(Rational(8, 5)), 1);
  EXPECT_EQ(Floor(Rational(-8, 5)), -2);
}

}  // namespace
}  // namespace gapcover
