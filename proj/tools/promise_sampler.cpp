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


#include "promise_sampler.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include <boost/random/uniform_int_distribution.hpp>

#include "gapcover/errors.hpp"
#include "gapcover/generators.hpp"

namespace gapcover::cli {
namespace {

std::size_t Draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return boost::random::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// d values satisfying the family's range predicate (and, for NO families,
// eta * d below the sizes that cap every cover).
std::vector<std::int64_t> CandidateDs(Family family, std::size_t n,
                                      std::size_t m, const Rational& eta) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= static_cast<std::int64_t>(std::max(n, m)); ++d) {
    const auto p = GapParams::Create(d, eta);
    switch (family) {
      case Family::kYesSetCover:
        if (p.SetCoverRangeHolds(m) && d <= static_cast<std::int64_t>(m))
          out.push_back(d);
        break;
      case Family::kNoSetCover:
        if (p.SetCoverRangeHolds(m) && p.eta_d() < m && p.eta_d() < n)
          out.push_back(d);
        break;
      case Family::kYesHypergraph:
        if (p.HypergraphRangeHolds(n)) out.push_back(d);
        break;
      case Family::kNoHypergraph:
        if (p.HypergraphRangeHolds(n) && p.eta_d() < n) out.push_back(d);
        break;
    }
  }
  return out;
}

}  // namespace

std::string FamilyName(Family f) {
  switch (f) {
    case Family::kYesSetCover:
      return "yes-set-cover";
    case Family::kNoSetCover:
      return "no-set-cover";
    case Family::kYesHypergraph:
      return "yes-hypergraph";
    case Family::kNoHypergraph:
      return "no-hypergraph";
  }
  return "unknown";
}

SampledInstance SamplePromiseInstance(Family family, std::mt19937_64& rng,
                                      const SamplerLimits& limits,
                                      const OracleOptions& oracle) {
  static const std::array<Rational, 3> kEtas = {Rational(3, 2), Rational(2),
                                                Rational(3)};
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const Rational& eta = kEtas[Draw(rng, 0, kEtas.size() - 1)];
    const std::size_t n = Draw(rng, 2, limits.max_n);
    const std::size_t m = Draw(rng, 1, limits.max_m);
    const std::size_t k = Draw(rng, 2, 3);
    const auto ds = CandidateDs(family, n, m, eta);
    if (ds.empty()) continue;
    const auto params = GapParams::Create(ds[Draw(rng, 0, ds.size() - 1)], eta);
    const std::uint64_t seed = rng();
    try {
      switch (family) {
        case Family::kYesSetCover:
          return {family, {GenerateYesSetCover(n, m, params, seed, oracle), params}, seed};
        case Family::kNoSetCover:
          return {family, {GenerateNoSetCover(n, m, params, seed, oracle), params}, seed};
        case Family::kYesHypergraph:
          return {family, {GenerateYesHypergraph(n, k, m, params, seed, oracle), params}, seed};
        case Family::kNoHypergraph:
          return {family, {GenerateNoHypergraph(n, k, m, params, seed, oracle), params}, seed};
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasibleParameters) throw;
    }
  }
  throw std::runtime_error("no feasible parameters found for " + FamilyName(family));
}

}  // namespace gapcover::cli
