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


#include "gapcover/hermite.hpp"

#include <utility>

namespace gapcover {

Integer FloorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) --q;
  return q;
}

namespace {

// row[target] -= factor * row[source], from column `from` on.
void SubtractMultiple(IntMatrix& m, std::size_t target, std::size_t source,
                      const Integer& factor, std::size_t from) {
  auto dst = m.row(target);
  auto src = m.row(source);
  for (std::size_t k = from; k < m.cols(); ++k) {
    if (!src[k].is_zero()) dst[k] -= factor * src[k];
  }
}

void NegateRow(IntMatrix& m, std::size_t i) {
  for (auto& x : m.row(i)) x = -x;
}

}  // namespace

HermiteResult HermiteNormalForm(IntMatrix a, const HermiteOptions& options) {
  HermiteResult result;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix u;
  if (options.track_transform) u = IntMatrix::Identity(rows);

  auto apply_subtract = [&](std::size_t target, std::size_t source,
                            const Integer& factor, std::size_t from) {
    SubtractMultiple(a, target, source, factor, from);
    if (options.track_transform) SubtractMultiple(u, target, source, factor, 0);
  };

  std::size_t p = 0;
  for (std::size_t j = 0; j < cols && p < rows; ++j) {
    // Euclid across the column: move the smallest nonzero entry to row p and
    // reduce everything below it until only row p is nonzero.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = p; i < rows; ++i) {
        if (a(i, j).is_zero()) continue;
        if (best == rows || abs(a(i, j)) < abs(a(best, j))) best = i;
      }
      if (best == rows) break;
      a.SwapRows(p, best);
      if (options.track_transform) u.SwapRows(p, best);

      bool clean = true;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (a(i, j).is_zero()) continue;
        Integer q = a(i, j) / a(p, j);
        apply_subtract(i, p, q, j);
        if (!a(i, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (a(p, j).is_zero()) continue;

    if (a(p, j).sign() < 0) {
      NegateRow(a, p);
      if (options.track_transform) NegateRow(u, p);
    }
    if (options.reduce_above_pivots) {
      for (std::size_t i = 0; i < p; ++i) {
        if (a(i, j).is_zero()) continue;
        Integer q = FloorDiv(a(i, j), a(p, j));
        if (!q.is_zero()) apply_subtract(i, p, q, j);
      }
    }
    result.pivot_columns.push_back(j);
    ++p;
  }

  result.form = std::move(a);
  result.transform = std::move(u);
  return result;
}

}  // namespace gapcover
