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
#include <vector>

#include "gapcover/int_matrix.hpp"

namespace gapcover {

struct HermiteOptions {
  // Record the unimodular transform U with U * input == form.
  bool track_transform = false;
  // Reduce entries above each pivot into [0, pivot). Without it the result is
  // a (non-canonical) row echelon form.
  bool reduce_above_pivots = true;
};

struct HermiteResult {
  IntMatrix form;
  IntMatrix transform;  // empty unless requested
  // Column index of the pivot of each nonzero row; rows [rank, rows) of
  // `form` are zero.
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const { return pivot_columns.size(); }
};

// Row-style Hermite normal form under unimodular row operations: nonzero rows
// come first, pivot columns strictly increase, pivots are positive.
HermiteResult HermiteNormalForm(IntMatrix a, const HermiteOptions& options = {});

// Floor division for b != 0.
Integer FloorDiv(const Integer& a, const Integer& b);

}  // namespace gapcover
