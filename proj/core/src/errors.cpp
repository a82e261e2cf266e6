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


#include "gapcover/errors.hpp"

namespace gapcover {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput:
      return "malformed-input";
    case ErrorKind::kInvariantViolation:
      return "invariant-violation";
    case ErrorKind::kParameterOutOfRange:
      return "parameter-out-of-range";
    case ErrorKind::kInfeasibleParameters:
      return "infeasible-parameters";
    case ErrorKind::kBudgetExceeded:
      return "budget-exceeded";
    case ErrorKind::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorKind::kInclusionViolation:
      return "inclusion-violation";
    case ErrorKind::kNoSolution:
      return "no-solution";
  }
  return "unknown";
}

}  // namespace gapcover
