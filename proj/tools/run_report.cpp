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


#include "run_report.hpp"

#include <array>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

#include "gapcover/instance_io.hpp"

namespace gapcover::cli {

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameterOutOfRange:
    case ErrorKind::kInfeasibleParameters:
      return kExitOutOfRange;
    case ErrorKind::kMalformedInput:
    case ErrorKind::kInvariantViolation:
      return kExitInvalidInstance;
    case ErrorKind::kBudgetExceeded:
      return kExitBudget;
    default:
      return kExitFailure;
  }
}

std::string Sha256Hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string InstanceDigest(const PromiseInstance& inst) {
  return "sha256:" + Sha256Hex(SerializeInstance(inst));
}

Json ToJson(const IntVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

Json ToJson(const Verdict& verdict) {
  const Witness& w = verdict.witness;
  Json witness = Json::object();
  if (w.zero_positions) witness["zero_positions"] = *w.zero_positions;
  if (w.zero_positions_required)
    witness["zero_positions_required"] = w.zero_positions_required->str();
  if (w.kernel_rank) witness["kernel_rank"] = *w.kernel_rank;
  if (w.vector) witness["vector"] = ToJson(*w.vector);
  if (w.projection_norm_sq)
    witness["projection_norm_sq"] = w.projection_norm_sq->str();
  if (w.norm_sq_bound) witness["norm_sq_bound"] = w.norm_sq_bound->str();
  if (w.rational_solution) {
    Json arr = Json::array();
    for (const auto& q : *w.rational_solution) arr.push_back(FormatRational(q));
    witness["rational_solution"] = std::move(arr);
  }
  if (w.hamming_weight) witness["hamming_weight"] = *w.hamming_weight;
  return {{"answer", AnswerName(verdict.answer)},
          {"decided_at", DecisionStepName(verdict.decided_at)},
          {"witness", std::move(witness)}};
}

Json ToJson(const OracleResult& result) {
  Json j;
  if (result.optimum) {
    j["optimum"] = *result.optimum;
  } else {
    j["optimum"] = "infeasible";
  }
  j["witness"] = result.witness;
  j["nodes_explored"] = result.nodes_explored;
  return j;
}

Json ToJson(const GapParams& params) {
  return {{"d", params.d()},
          {"eta",
           {{"num", numerator(params.eta()).str()},
            {"den", denominator(params.eta()).str()}}}};
}

Json ToJson(const LemmaReport& report) {
  Json checks = Json::object();
  for (const auto& [id, n] : report.checks) checks[id] = n;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"lemma", v.lemma},
                          {"detail", v.detail},
                          {"witness", ToJson(v.witness)}});
  }
  return {{"checks", std::move(checks)}, {"violations", std::move(violations)}};
}

Json ErrorJson(const Error& error) {
  return {{"kind", ErrorKindName(error.kind())}, {"message", error.what()}};
}

std::string_view InstanceTypeName(const PromiseInstance& inst) {
  return std::holds_alternative<SetCoverInstance>(inst.instance) ? "set_cover"
                                                                 : "hypergraph_vc";
}

}  // namespace gapcover::cli
