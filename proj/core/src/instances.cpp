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

#include <algorithm>
#include <string>

#include "gapcover/errors.hpp"

namespace gapcover {
namespace {

[[noreturn]] void Violation(const std::string& message) {
  throw Error(ErrorKind::kInvariantViolation, message);
}

void NormalizeIndexSet(IndexSet& s, std::size_t bound, const char* what,
                       std::size_t which) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    Violation(std::string(what) + " " + std::to_string(which) +
              " repeats an index");
  }
  if (!s.empty() && s.back() >= bound) {
    Violation(std::string(what) + " " + std::to_string(which) + " has index " +
              std::to_string(s.back()) + " outside [0, " +
              std::to_string(bound) + ")");
  }
}

}  // namespace

SetCoverInstance SetCoverInstance::Create(std::size_t universe_size,
                                          std::vector<IndexSet> sets) {
  if (universe_size == 0) Violation("universe_size must be positive");
  if (sets.empty()) Violation("at least one set is required");
  std::vector<bool> covered(universe_size, false);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (sets[j].empty()) Violation("set " + std::to_string(j) + " is empty");
    NormalizeIndexSet(sets[j], universe_size, "set", j);
    for (std::size_t u : sets[j]) covered[u] = true;
  }
  std::string missing;
  for (std::size_t u = 0; u < universe_size; ++u) {
    if (covered[u]) continue;
    if (!missing.empty()) missing += ", ";
    missing += std::to_string(u);
  }
  if (!missing.empty()) {
    Violation("sets do not cover the universe; uncovered elements: " + missing);
  }
  return SetCoverInstance(universe_size, std::move(sets));
}

HypergraphInstance HypergraphInstance::Create(std::size_t vertex_count,
                                              std::size_t uniformity,
                                              std::vector<IndexSet> edges) {
  if (vertex_count == 0) Violation("vertex_count must be positive");
  if (uniformity < 2) Violation("uniformity k must be at least 2");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].size() != uniformity) {
      Violation("edge " + std::to_string(e) + " has " +
                std::to_string(edges[e].size()) + " vertices, expected " +
                std::to_string(uniformity));
    }
    NormalizeIndexSet(edges[e], vertex_count, "edge", e);
  }
  return HypergraphInstance(vertex_count, uniformity, std::move(edges));
}

GapParams GapParams::Create(std::int64_t d, Rational eta) {
  if (d < 1) {
    throw Error(ErrorKind::kParameterOutOfRange, "d must be a positive integer");
  }
  if (eta <= 1) {
    throw Error(ErrorKind::kParameterOutOfRange, "eta must exceed 1");
  }
  return GapParams(d, std::move(eta));
}

bool GapParams::SetCoverRangeHolds(std::size_t set_count) const {
  return Rational(d_) * (3 * eta_ - 1) > Rational(2 * set_count);
}

bool GapParams::HypergraphRangeHolds(std::size_t vertex_count) const {
  return 2 * eta_ * d_ > Rational(vertex_count);
}

IntMatrix BuildSetCoverIncidence(const SetCoverInstance& inst) {
  IntMatrix b(inst.universe_size(), inst.set_count());
  for (std::size_t j = 0; j < inst.set_count(); ++j) {
    for (std::size_t u : inst.sets()[j]) b(u, j) = 1;
  }
  return b;
}

IntMatrix BuildHypergraphIncidence(const HypergraphInstance& inst) {
  IntMatrix b(inst.edge_count(), inst.vertex_count());
  for (std::size_t e = 0; e < inst.edge_count(); ++e) {
    for (std::size_t v : inst.edges()[e]) b(e, v) = 1;
  }
  return b;
}

Integer Ceil(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer f = num / den;
  if (f * den != num && num.sign() > 0) ++f;
  return f;
}

Integer Floor(const Rational& q) { return -Ceil(-q); }

}  // namespace gapcover
