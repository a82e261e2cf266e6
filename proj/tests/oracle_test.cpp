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


#include "gapcover/oracle.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "gapcover/errors.hpp"

namespace gapcover {
namespace {

using testing::BruteMinCover;
using testing::BruteMinVertexCover;
using testing::kNone;

SetCoverInstance Singletons(std::size_t n) {
  std::vector<IndexSet> sets;
  for (std::size_t i = 0; i < n; ++i) sets.push_back({i});
  return SetCoverInstance::Create(n, sets);
}

HypergraphInstance Path4() {
  return HypergraphInstance::Create(4, 2, {{0, 1}, {1, 2}, {2, 3}});
}

HypergraphInstance K4() {
  return HypergraphInstance::Create(4, 2,
                                    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

int Optimum(const OracleResult& r) { return r.optimum ? static_cast<int>(*r.optimum) : kNone; }

TEST(MinExactCoverSizeTest, FourSets) {
  auto inst = SetCoverInstance::Create(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  EXPECT_EQ(BruteMinCover(inst, true), 2);
  auto r = MinExactCoverSize(inst, 4);
  EXPECT_EQ(r.optimum, 2);
  EXPECT_TRUE(IsExactCover(inst, r.witness));
  EXPECT_EQ(r.witness, (IndexSet{0, 1}));
}

TEST(MinExactCoverSizeTest, Singletons) {
  EXPECT_EQ(MinExactCoverSize(Singletons(13), 13).optimum, 13);
  EXPECT_FALSE(MinExactCoverSize(Singletons(13), 12).feasible());
}

TEST(MinExactCoverSizeTest, NoExactCover) {
  auto inst = SetCoverInstance::Create(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(MinExactCoverSize(inst, 10).feasible());
}

TEST(MinCoverSizeTest, Examples) {
  EXPECT_EQ(MinCoverSize(Singletons(13)).optimum, 13);
  auto tri = SetCoverInstance::Create(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(BruteMinCover(tri, false), 2);
  EXPECT_EQ(MinCoverSize(tri).optimum, 2);
  EXPECT_EQ(MinCoverSize(SetCoverInstance::Create(5, {{0, 1, 2, 3, 4}})).optimum, 1);
}

TEST(MinVertexCoverSizeTest, Examples) {
  EXPECT_EQ(BruteMinVertexCover(K4(), false), 3);
  EXPECT_EQ(MinVertexCoverSize(K4()).optimum, 3);
  auto path = MinVertexCoverSize(Path4());
  EXPECT_EQ(path.optimum, 2);
  EXPECT_TRUE(IsVertexCover(Path4(), path.witness));
  EXPECT_EQ(MinVertexCoverSize(HypergraphInstance::Create(2, 2, {{0, 1}})).optimum, 1);
}

TEST(HasExactVertexCoverTest, Examples) {
  auto path = HasExactVertexCover(Path4(), 2);
  EXPECT_EQ(path.optimum, 2);
  EXPECT_TRUE(IsExactVertexCover(Path4(), path.witness));
  EXPECT_TRUE(IsExactVertexCover(Path4(), {1, 3}));

  auto k3 = HypergraphInstance::Create(3, 2, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(BruteMinVertexCover(k3, true), kNone);
  for (int d = 1; d <= 3; ++d) EXPECT_FALSE(HasExactVertexCover(k3, d).feasible());

  EXPECT_EQ(HasExactVertexCover(HypergraphInstance::Create(2, 2, {{0, 1}}), 1).optimum, 1);
}

// Every search agrees with subset enumeration, witnesses re-validate, and
// results do not depend on the order of sets or edges.
TEST(OracleProperties, AgreeWithEnumerationUnderShuffles) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t m = 1 + rng() % 9;
    std::vector<IndexSet> sets(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t u = 0; u < n; ++u)
        if (rng() % 3 == 0) sets[j].push_back(u);
      if (sets[j].empty()) sets[j].push_back(rng() % n);
    }
    for (std::size_t u = 0; u < n; ++u) sets[rng() % m].push_back(u);
    for (auto& s : sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    auto inst = SetCoverInstance::Create(n, sets);
    const int cover = BruteMinCover(inst, false);
    const int exact = BruteMinCover(inst, true);

    auto shuffled = sets;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto permuted = SetCoverInstance::Create(n, shuffled);
    for (const auto* x : {&inst, &permuted}) {
      auto c = MinCoverSize(*x);
      EXPECT_EQ(Optimum(c), cover);
      EXPECT_TRUE(IsCover(*x, c.witness));
      auto e = MinExactCoverSize(*x, static_cast<std::int64_t>(m));
      EXPECT_EQ(Optimum(e), exact);
      if (e.feasible()) {
        EXPECT_TRUE(IsExactCover(*x, e.witness));
        EXPECT_GE(*e.optimum, *c.optimum);
      }
    }

    const std::size_t k = 2 + rng() % 2;
    const std::size_t vn = k + rng() % 8;
    std::vector<IndexSet> edges;
    for (std::size_t e = 0; e < 1 + rng() % 10; ++e) {
      std::vector<std::size_t> vs(vn);
      for (std::size_t i = 0; i < vn; ++i) vs[i] = i;
      std::shuffle(vs.begin(), vs.end(), rng);
      edges.emplace_back(vs.begin(), vs.begin() + static_cast<long>(k));
    }
    auto graph = HypergraphInstance::Create(vn, k, edges);
    std::shuffle(edges.begin(), edges.end(), rng);
    auto graph_permuted = HypergraphInstance::Create(vn, k, edges);
    const int vc = BruteMinVertexCover(graph, false);
    const int evc = BruteMinVertexCover(graph, true);
    for (const auto* g : {&graph, &graph_permuted}) {
      auto r = MinVertexCoverSize(*g);
      EXPECT_EQ(Optimum(r), vc);
      EXPECT_TRUE(IsVertexCover(*g, r.witness));
      auto x = HasExactVertexCover(*g, static_cast<std::int64_t>(vn));
      EXPECT_EQ(Optimum(x), evc);
      if (x.feasible()) EXPECT_TRUE(IsExactVertexCover(*g, x.witness));
    }
  }
}

TEST(OracleBudgetTest, NodeBudgetFailsLoudly) {
  OracleOptions tight;
  tight.node_budget = 3;
  try {
    MinExactCoverSize(Singletons(13), 13, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExceeded);
  }
}

TEST(OracleBudgetTest, SizeGate) {
  EXPECT_THROW(MinCoverSize(Singletons(21)), Error);
  OracleOptions wide;
  wide.max_universe = 30;
  wide.max_sets = 30;
  EXPECT_EQ(MinCoverSize(Singletons(21), wide).optimum, 21);
}

TEST(ClassifyTest, PromiseClasses) {
  auto four = SetCoverInstance::Create(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  EXPECT_EQ(ClassifySetCover(four, GapParams::Create(2, Rational(2))).kind,
            PromiseClass::kYes);
  EXPECT_EQ(ClassifySetCover(Singletons(13), GapParams::Create(4, Rational(3))).kind,
            PromiseClass::kNo);
  // Minimum cover 13 does not exceed eta * d = 13.
  EXPECT_EQ(ClassifySetCover(Singletons(13), GapParams::Create(1, Rational(13))).kind,
            PromiseClass::kNeither);
  EXPECT_EQ(ClassifyHypergraph(K4(), GapParams::Create(2, Rational(7, 5))).kind,
            PromiseClass::kNo);
  EXPECT_EQ(ClassifyHypergraph(Path4(), GapParams::Create(2, Rational(2))).kind,
            PromiseClass::kYes);
}

}  // namespace
}  // namespace gapcover
