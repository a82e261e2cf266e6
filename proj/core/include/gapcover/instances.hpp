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
#include <variant>
#include <vector>

#include "gapcover/int_matrix.hpp"

namespace gapcover {

using IndexSet = std::vector<std::size_t>;  // sorted, distinct

// Ground set {0, ..., n-1} and m non-empty subsets whose union is the ground
// set. Duplicate subsets are allowed.
class SetCoverInstance {
 public:
  // Sorts each set. Throws kInvariantViolation on empty sets, out-of-range or
  // repeated elements, or uncovered elements.
  static SetCoverInstance Create(std::size_t universe_size,
                                 std::vector<IndexSet> sets);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t set_count() const { return sets_.size(); }
  const std::vector<IndexSet>& sets() const { return sets_; }

  friend bool operator==(const SetCoverInstance&,
                         const SetCoverInstance&) = default;

 private:
  SetCoverInstance(std::size_t n, std::vector<IndexSet> sets)
      : universe_size_(n), sets_(std::move(sets)) {}

  std::size_t universe_size_;
  std::vector<IndexSet> sets_;
};

// k-uniform hypergraph on vertices {0, ..., n-1}.
class HypergraphInstance {
 public:
  // Sorts each edge. Throws kInvariantViolation unless every edge holds
  // exactly k distinct in-range vertices and k >= 2.
  static HypergraphInstance Create(std::size_t vertex_count,
                                   std::size_t uniformity,
                                   std::vector<IndexSet> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t uniformity() const { return uniformity_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<IndexSet>& edges() const { return edges_; }

  friend bool operator==(const HypergraphInstance&,
                         const HypergraphInstance&) = default;

 private:
  HypergraphInstance(std::size_t n, std::size_t k, std::vector<IndexSet> e)
      : vertex_count_(n), uniformity_(k), edges_(std::move(e)) {}

  std::size_t vertex_count_;
  std::size_t uniformity_;
  std::vector<IndexSet> edges_;
};

// Cover-size bound d and gap factor eta > 1, eta kept as an exact rational.
class GapParams {
 public:
  // Throws kParameterOutOfRange unless d >= 1 and eta > 1.
  static GapParams Create(std::int64_t d, Rational eta);

  std::int64_t d() const { return d_; }
  const Rational& eta() const { return eta_; }
  Rational eta_d() const { return eta_ * d_; }

  // d > 2m / (3 eta - 1)
  bool SetCoverRangeHolds(std::size_t set_count) const;
  // d > n / (2 eta)
  bool HypergraphRangeHolds(std::size_t vertex_count) const;

  friend bool operator==(const GapParams&, const GapParams&) = default;

 private:
  GapParams(std::int64_t d, Rational eta) : d_(d), eta_(std::move(eta)) {}

  std::int64_t d_;
  Rational eta_;
};

using Instance = std::variant<SetCoverInstance, HypergraphInstance>;

// An instance file: the instance together with its promise parameters.
struct PromiseInstance {
  Instance instance;
  GapParams params;

  friend bool operator==(const PromiseInstance&,
                         const PromiseInstance&) = default;
};

// n x m; column j is the characteristic vector of sets[j].
IntMatrix BuildSetCoverIncidence(const SetCoverInstance& inst);

// m x n; entry (e, v) is 1 iff vertex v lies on edge e.
IntMatrix BuildHypergraphIncidence(const HypergraphInstance& inst);

Integer Ceil(const Rational& q);
Integer Floor(const Rational& q);

}  // namespace gapcover
