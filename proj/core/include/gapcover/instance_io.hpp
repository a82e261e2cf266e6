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

#include "gapcover/instances.hpp"

namespace gapcover {

// JSON instance files, UTF-8, one document per file:
//   {"type":"set_cover","universe_size":N,"sets":[[...],...],
//    "d":D,"eta":{"num":P,"den":Q}}
//   {"type":"hypergraph_vc","vertex_count":N,"k":K,"edges":[[...],...],
//    "d":D,"eta":{"num":P,"den":Q}}
//
// Syntax and schema problems throw kMalformedInput (with line or field
// path); structurally valid documents describing an invalid instance throw
// kInvariantViolation.
PromiseInstance ParseInstance(std::string_view text);

// Canonical compact encoding with keys in the order shown above and a
// trailing newline. Sets and edges are written sorted.
std::string SerializeInstance(const PromiseInstance& inst);

// Accepts "P/Q" or "P" in decimal. Throws kMalformedInput.
Rational ParseRational(std::string_view text);
std::string FormatRational(const Rational& q);

}  // namespace gapcover
