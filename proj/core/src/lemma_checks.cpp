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


#include "gapcover/lemma_checks.hpp"

#include <string>

#include "gapcover/lattice.hpp"

namespace gapcover {

void LemmaReport::Merge(const LemmaReport& other) {
  for (const auto& [id, n] : other.checks) checks[id] += n;
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
}

namespace {

class Checker {
 public:
  explicit Checker(LemmaReport& report) : report_(report) {}

  void Expect(const char* id, bool holds, std::string detail,
              IntVector witness = {}) {
    ++report_.checks[id];
    if (!holds) {
      report_.violations.push_back({id, std::move(detail), std::move(witness)});
    }
  }

 private:
  LemmaReport& report_;
};

// Support bounds that hold on NO instances: each basis vector, and the union
// of all basis supports, fit in 2(dim - eta d) coordinates.
void CheckNoSupport(Checker& check, const LatticeBasis& kernel,
                    std::size_t dim, const GapParams& params) {
  const Rational bound = 2 * (Rational(dim) - params.eta_d());
  for (const auto& v : kernel.vectors()) {
    const std::size_t support = SupportSize(v);
    check.Expect(lemma::kSupportBound, Rational(support) <= bound,
                 "basis vector support " + std::to_string(support) +
                     " exceeds 2(dim - eta d)",
                 v);
  }
  const std::size_t spread = SupportUnion(kernel).size();
  check.Expect(lemma::kSupportConfinement, Rational(spread) <= bound,
               "union of basis supports has " + std::to_string(spread) +
                   " coordinates, above 2(dim - eta d)");
}

void CheckAgreement(Checker& check, const Verdict& verdict,
                    PromiseClass expected) {
  if (expected == PromiseClass::kNeither) return;
  const Answer want = expected == PromiseClass::kYes ? Answer::kYes : Answer::kNo;
  check.Expect(lemma::kAgreement, verdict.answer == want,
               std::string("verdict ") + std::string(AnswerName(verdict.answer)) +
                   " at " + std::string(DecisionStepName(verdict.decided_at)) +
                   " but oracle says " +
                   std::string(PromiseClassName(expected)),
               verdict.witness.vector.value_or(IntVector{}));
}

void CheckSetCover(Checker& check, const SetCoverInstance& inst,
                   const GapParams& params, const Classification& cls) {
  const std::size_t m = inst.set_count();
  const Rational eta_d = params.eta_d();
  if (params.SetCoverRangeHolds(m)) {
    check.Expect(lemma::kThreshold, eta_d - 2 * (Rational(m) - eta_d) > params.d(),
                 "eta d - 2(m - eta d) <= d inside the parameter range");
  }
  const IntMatrix b = BuildSetCoverIncidence(inst);
  const LatticeBasis kernel = KernelLatticeBasis(b);

  if (cls.kind == PromiseClass::kNo) CheckNoSupport(check, kernel, m, params);

  if (cls.kind == PromiseClass::kYes) {
    // (x0, -1) in L(B') for the oracle's exact cover x0.
    IntVector lifted(m + 1);
    for (std::size_t j : cls.exact.witness) lifted[j] = 1;
    lifted[m] = -1;
    const LatticeBasis extended = KernelLatticeBasis(AppendOnesColumn(b));
    check.Expect(lemma::kProjectionBound, extended.Contains(lifted),
                 "exact-cover vector (x0, -1) is not in L(B')", lifted);
  }

  if (!params.SetCoverRangeHolds(m)) return;
  const Verdict verdict = DistinguishSetCover(inst, params);
  if (cls.kind == PromiseClass::kYes &&
      verdict.decided_at == DecisionStep::kStep4) {
    const Integer& norm = *verdict.witness.projection_norm_sq;
    check.Expect(lemma::kProjectionBound, norm <= params.d(),
                 "squared projection norm " + norm.str() + " exceeds d = " +
                     std::to_string(params.d()),
                 *verdict.witness.vector);
  }
  CheckAgreement(check, verdict, cls.kind);
}

void CheckHypergraph(Checker& check, const HypergraphInstance& inst,
                     const GapParams& params, const Classification& cls) {
  const std::size_t n = inst.vertex_count();
  const IntMatrix b = BuildHypergraphIncidence(inst);
  const LatticeBasis kernel = KernelLatticeBasis(b);

  if (cls.kind == PromiseClass::kYes) {
    IntVector v(n, Integer(-1));
    for (std::size_t u : cls.exact.witness) v[u] += Integer(inst.uniformity());
    const bool in_kernel = IsZero(b.Multiply(v));
    check.Expect(lemma::kFullSupportVector,
                 in_kernel && SupportSize(v) == n && kernel.Contains(v),
                 "k * chi(V') - 1 is not a full-support lattice vector", v);
  }
  if (cls.kind == PromiseClass::kNo) CheckNoSupport(check, kernel, n, params);

  if (!params.HypergraphRangeHolds(n)) return;
  CheckAgreement(check, DistinguishHypergraphVc(inst, params), cls.kind);
}

}  // namespace

LemmaReport CheckLemmas(const PromiseInstance& inst,
                        const Classification& classification) {
  LemmaReport report;
  Checker check(report);
  if (const auto* sc = std::get_if<SetCoverInstance>(&inst.instance)) {
    CheckSetCover(check, *sc, inst.params, classification);
  } else {
    CheckHypergraph(check, std::get<HypergraphInstance>(inst.instance),
                    inst.params, classification);
  }
  return report;
}

}  // namespace gapcover
