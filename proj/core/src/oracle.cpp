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
#include <bit>
#include <stdexcept>
#include <string>

#include "gapcover/errors.hpp"

namespace gapcover {
namespace {

using Mask = std::uint64_t;

Mask Bit(std::size_t i) { return Mask{1} << i; }
Mask FullMask(std::size_t n) { return n == 64 ? ~Mask{0} : Bit(n) - 1; }

Mask ToMask(const IndexSet& s) {
  Mask m = 0;
  for (std::size_t i : s) m |= Bit(i);
  return m;
}

void CheckSize(std::size_t value, std::size_t limit, const char* what) {
  if (value > std::min<std::size_t>(limit, 64)) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::string(what) + " " + std::to_string(value) +
                    " exceeds the oracle size budget of " +
                    std::to_string(std::min<std::size_t>(limit, 64)));
  }
}

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void Tick() {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "oracle search exceeded " + std::to_string(budget_) +
                      " nodes");
    }
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

struct SetSystem {
  Mask full = 0;
  std::vector<Mask> sets;
  std::vector<std::vector<std::size_t>> containing;  // element -> set indices
  int max_set_size = 1;
};

SetSystem MakeSetSystem(const SetCoverInstance& inst) {
  SetSystem sys;
  sys.full = FullMask(inst.universe_size());
  sys.containing.resize(inst.universe_size());
  for (std::size_t j = 0; j < inst.set_count(); ++j) {
    sys.sets.push_back(ToMask(inst.sets()[j]));
    sys.max_set_size =
        std::max(sys.max_set_size, static_cast<int>(inst.sets()[j].size()));
    for (std::size_t u : inst.sets()[j]) sys.containing[u].push_back(j);
  }
  return sys;
}

void EnsureWitness(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("oracle produced an invalid ") + what);
}

}  // namespace

std::string_view PromiseClassName(PromiseClass c) {
  switch (c) {
    case PromiseClass::kYes:
      return "YES";
    case PromiseClass::kNo:
      return "NO";
    case PromiseClass::kNeither:
      return "neither";
  }
  return "neither";
}

bool IsCover(const SetCoverInstance& inst, const IndexSet& chosen) {
  std::vector<bool> hit(inst.universe_size(), false);
  for (std::size_t j : chosen) {
    if (j >= inst.set_count()) return false;
    for (std::size_t u : inst.sets()[j]) hit[u] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool IsExactCover(const SetCoverInstance& inst, const IndexSet& chosen) {
  std::vector<int> hits(inst.universe_size(), 0);
  for (std::size_t j : chosen) {
    if (j >= inst.set_count()) return false;
    for (std::size_t u : inst.sets()[j]) ++hits[u];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace {

std::vector<int> HitsPerEdge(const HypergraphInstance& inst,
                             const IndexSet& chosen) {
  std::vector<bool> in(inst.vertex_count(), false);
  for (std::size_t v : chosen) {
    if (v < inst.vertex_count()) in[v] = true;
  }
  std::vector<int> hits;
  for (const auto& e : inst.edges()) {
    hits.push_back(static_cast<int>(
        std::count_if(e.begin(), e.end(), [&](std::size_t v) { return in[v]; })));
  }
  return hits;
}

bool InRange(const HypergraphInstance& inst, const IndexSet& chosen) {
  return std::all_of(chosen.begin(), chosen.end(),
                     [&](std::size_t v) { return v < inst.vertex_count(); });
}

}  // namespace

bool IsVertexCover(const HypergraphInstance& inst, const IndexSet& chosen) {
  auto hits = HitsPerEdge(inst, chosen);
  return InRange(inst, chosen) &&
         std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
}

bool IsExactVertexCover(const HypergraphInstance& inst, const IndexSet& chosen) {
  auto hits = HitsPerEdge(inst, chosen);
  return InRange(inst, chosen) &&
         std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

OracleResult MinExactCoverSize(const SetCoverInstance& inst, std::int64_t limit,
                               const OracleOptions& options) {
  CheckSize(inst.universe_size(), options.max_universe, "universe size");
  CheckSize(inst.set_count(), options.max_sets, "set count");
  const SetSystem sys = MakeSetSystem(inst);
  NodeCounter counter(options.node_budget);

  // best is the size of the smallest exact cover found so far, capped at
  // limit + 1 to mean "none within the limit".
  std::int64_t best = std::max<std::int64_t>(limit, 0) + 1;
  IndexSet best_witness;
  IndexSet stack;

  auto search = [&](auto&& self, Mask covered) -> void {
    counter.Tick();
    const auto depth = static_cast<std::int64_t>(stack.size());
    if (covered == sys.full) {
      if (depth < best) {
        best = depth;
        best_witness = stack;
      }
      return;
    }
    if (depth + 1 >= best) return;
    const std::size_t u = static_cast<std::size_t>(std::countr_zero(~covered));
    for (std::size_t j : sys.containing[u]) {
      if (sys.sets[j] & covered) continue;
      stack.push_back(j);
      self(self, covered | sys.sets[j]);
      stack.pop_back();
    }
  };
  search(search, 0);

  OracleResult result;
  result.nodes_explored = counter.nodes();
  if (best <= limit) {
    std::sort(best_witness.begin(), best_witness.end());
    EnsureWitness(IsExactCover(inst, best_witness) &&
                      static_cast<std::int64_t>(best_witness.size()) == best,
                  "exact cover");
    result.optimum = best;
    result.witness = std::move(best_witness);
  }
  return result;
}

OracleResult MinCoverSize(const SetCoverInstance& inst,
                          const OracleOptions& options) {
  CheckSize(inst.universe_size(), options.max_universe, "universe size");
  CheckSize(inst.set_count(), options.max_sets, "set count");
  const SetSystem sys = MakeSetSystem(inst);
  NodeCounter counter(options.node_budget);

  // Taking every set is always a cover.
  auto best = static_cast<std::int64_t>(inst.set_count());
  IndexSet best_witness(inst.set_count());
  for (std::size_t j = 0; j < best_witness.size(); ++j) best_witness[j] = j;
  IndexSet stack;

  auto search = [&](auto&& self, Mask covered) -> void {
    counter.Tick();
    const auto depth = static_cast<std::int64_t>(stack.size());
    if (covered == sys.full) {
      if (depth < best) {
        best = depth;
        best_witness = stack;
      }
      return;
    }
    const int uncovered = std::popcount(sys.full & ~covered);
    const std::int64_t lower =
        depth + (uncovered + sys.max_set_size - 1) / sys.max_set_size;
    if (lower >= best) return;

    const std::size_t u = static_cast<std::size_t>(std::countr_zero(~covered));
    std::vector<std::size_t> options_for_u = sys.containing[u];
    std::stable_sort(options_for_u.begin(), options_for_u.end(),
                     [&](std::size_t a, std::size_t b) {
                       return std::popcount(sys.sets[a] & ~covered) >
                              std::popcount(sys.sets[b] & ~covered);
                     });
    for (std::size_t j : options_for_u) {
      stack.push_back(j);
      self(self, covered | sys.sets[j]);
      stack.pop_back();
    }
  };
  search(search, 0);

  std::sort(best_witness.begin(), best_witness.end());
  EnsureWitness(IsCover(inst, best_witness) &&
                    static_cast<std::int64_t>(best_witness.size()) == best,
                "cover");
  OracleResult result;
  result.optimum = best;
  result.witness = std::move(best_witness);
  result.nodes_explored = counter.nodes();
  return result;
}

namespace {

struct EdgeSystem {
  std::vector<Mask> edges;
  std::vector<Mask> neighborhood;  // vertex -> union of edges through it
};

EdgeSystem MakeEdgeSystem(const HypergraphInstance& inst) {
  EdgeSystem sys;
  sys.neighborhood.assign(inst.vertex_count(), 0);
  for (const auto& e : inst.edges()) {
    Mask m = ToMask(e);
    sys.edges.push_back(m);
    for (std::size_t v : e) sys.neighborhood[v] |= m;
  }
  return sys;
}

// Index of the first edge missed by `chosen`, or edges.size().
std::size_t FirstMissedEdge(const EdgeSystem& sys, Mask chosen) {
  for (std::size_t e = 0; e < sys.edges.size(); ++e) {
    if (!(sys.edges[e] & chosen)) return e;
  }
  return sys.edges.size();
}

IndexSet MaskToIndices(Mask m) {
  IndexSet out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace

OracleResult MinVertexCoverSize(const HypergraphInstance& inst,
                                const OracleOptions& options) {
  CheckSize(inst.vertex_count(), options.max_vertices, "vertex count");
  const EdgeSystem sys = MakeEdgeSystem(inst);
  NodeCounter counter(options.node_budget);

  // All vertices lying on some edge form a cover.
  Mask best_mask = 0;
  for (Mask e : sys.edges) best_mask |= e;
  int best = std::popcount(best_mask);

  auto search = [&](auto&& self, Mask chosen, int depth) -> void {
    counter.Tick();
    // Greedy packing of pairwise-disjoint missed edges bounds the remainder.
    int packing = 0;
    Mask used = 0;
    for (Mask e : sys.edges) {
      if (!(e & chosen) && !(e & used)) {
        ++packing;
        used |= e;
      }
    }
    if (packing == 0) {
      if (depth < best) {
        best = depth;
        best_mask = chosen;
      }
      return;
    }
    if (depth + packing >= best) return;
    const std::size_t e = FirstMissedEdge(sys, chosen);
    for (Mask rest = sys.edges[e]; rest; rest &= rest - 1) {
      self(self, chosen | (rest & -rest), depth + 1);
    }
  };
  search(search, 0, 0);

  OracleResult result;
  result.optimum = best;
  result.witness = MaskToIndices(best_mask);
  result.nodes_explored = counter.nodes();
  EnsureWitness(IsVertexCover(inst, result.witness), "vertex cover");
  return result;
}

OracleResult HasExactVertexCover(const HypergraphInstance& inst, std::int64_t d,
                                 const OracleOptions& options) {
  CheckSize(inst.vertex_count(), options.max_vertices, "vertex count");
  const EdgeSystem sys = MakeEdgeSystem(inst);
  NodeCounter counter(options.node_budget);

  std::int64_t best = std::max<std::int64_t>(d, 0) + 1;
  Mask best_mask = 0;

  // Choosing v forbids every other vertex sharing an edge with it, so no edge
  // is ever hit twice.
  auto search = [&](auto&& self, Mask chosen, Mask forbidden,
                    std::int64_t depth) -> void {
    counter.Tick();
    const std::size_t e = FirstMissedEdge(sys, chosen);
    if (e == sys.edges.size()) {
      if (depth < best) {
        best = depth;
        best_mask = chosen;
      }
      return;
    }
    if (depth + 1 >= best) return;
    for (Mask rest = sys.edges[e] & ~forbidden; rest; rest &= rest - 1) {
      const Mask v = rest & -rest;
      const auto index = static_cast<std::size_t>(std::countr_zero(v));
      self(self, chosen | v, forbidden | sys.neighborhood[index], depth + 1);
    }
  };
  search(search, 0, 0, 0);

  OracleResult result;
  result.nodes_explored = counter.nodes();
  if (best <= d) {
    result.optimum = best;
    result.witness = MaskToIndices(best_mask);
    EnsureWitness(IsExactVertexCover(inst, result.witness) &&
                      static_cast<std::int64_t>(result.witness.size()) == best,
                  "exact vertex cover");
  }
  return result;
}

Classification ClassifySetCover(const SetCoverInstance& inst,
                                const GapParams& params,
                                const OracleOptions& options) {
  Classification c;
  c.exact = MinExactCoverSize(inst, params.d(), options);
  if (c.exact.feasible()) {
    c.kind = PromiseClass::kYes;
    return c;
  }
  c.minimum = MinCoverSize(inst, options);
  if (Rational(*c.minimum.optimum) > params.eta_d()) c.kind = PromiseClass::kNo;
  return c;
}

Classification ClassifyHypergraph(const HypergraphInstance& inst,
                                  const GapParams& params,
                                  const OracleOptions& options) {
  Classification c;
  c.exact = HasExactVertexCover(inst, params.d(), options);
  if (c.exact.feasible()) {
    c.kind = PromiseClass::kYes;
    return c;
  }
  c.minimum = MinVertexCoverSize(inst, options);
  if (Rational(*c.minimum.optimum) > params.eta_d()) c.kind = PromiseClass::kNo;
  return c;
}

Classification Classify(const PromiseInstance& inst,
                        const OracleOptions& options) {
  if (const auto* sc = std::get_if<SetCoverInstance>(&inst.instance)) {
    return ClassifySetCover(*sc, inst.params, options);
  }
  return ClassifyHypergraph(std::get<HypergraphInstance>(inst.instance),
                            inst.params, options);
}

}  // namespace gapcover
