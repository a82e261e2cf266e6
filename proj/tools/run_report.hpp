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

#include <string>
#include <string_view>

#include "gapcover/distinguisher.hpp"
#include "gapcover/errors.hpp"
#include "gapcover/lemma_checks.hpp"
#include "gapcover/oracle.hpp"
#include "json.hpp"

namespace gapcover::cli {

using Json = nlohmann::ordered_json;

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // I/O errors, lemma violations, anything unclassified
  kExitOutOfRange = 2,
  kExitInvalidInstance = 3,
  kExitBudget = 4,
};

int ExitCodeFor(ErrorKind kind);

// "sha256:<hex>" of the canonical serialization.
std::string InstanceDigest(const PromiseInstance& inst);
std::string Sha256Hex(std::string_view bytes);

// Big integers are emitted as decimal strings, rationals as "p/q".
Json ToJson(const IntVector& v);
Json ToJson(const Verdict& verdict);
Json ToJson(const OracleResult& result);
Json ToJson(const GapParams& params);
Json ToJson(const LemmaReport& report);
Json ErrorJson(const Error& error);

std::string_view InstanceTypeName(const PromiseInstance& inst);

}  // namespace gapcover::cli
