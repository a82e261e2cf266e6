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
#include <optional>
#include <span>
#include <vector>

#include "gapcover/int_matrix.hpp"

namespace gapcover {

// Exact rationals; mpq keeps them reduced with positive denominators.
using RationalVector = std::vector<Rational>;

// Rank over Q by fraction-free (Bareiss) elimination. Shares no code with the
// Hermite routines so it can cross-check them.
std::size_t Rank(const IntMatrix& b);

// Some exact solution of B y = target (free variables set to zero), or
// nullopt when the system is inconsistent.
std::optional<RationalVector> SolveRational(const IntMatrix& b,
                                            std::span<const Integer> target);

std::size_t HammingWeight(std::span<const Rational> v);

}  // namespace gapcover
