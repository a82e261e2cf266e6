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


#include "gapcover/rational_solve.hpp"

#include <algorithm>
#include <cassert>

namespace gapcover {
namespace {

struct Echelon {
  IntMatrix m;
  std::vector<std::size_t> pivot_columns;
};

// Bareiss elimination over the first `coefficient_cols` columns; any further
// columns are carried along as right-hand sides.
Echelon FractionFreeEliminate(IntMatrix m, std::size_t coefficient_cols) {
  Echelon out;
  Integer previous = 1;
  std::size_t p = 0;
  for (std::size_t c = 0; c < coefficient_cols && p < m.rows(); ++c) {
    std::size_t r = p;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    m.SwapRows(p, r);
    for (std::size_t i = p + 1; i < m.rows(); ++i) {
      for (std::size_t k = c + 1; k < m.cols(); ++k) {
        m(i, k) = (m(p, c) * m(i, k) - m(i, c) * m(p, k)) / previous;
      }
      m(i, c) = 0;
    }
    previous = m(p, c);
    out.pivot_columns.push_back(c);
    ++p;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

std::size_t Rank(const IntMatrix& b) {
  return FractionFreeEliminate(b, b.cols()).pivot_columns.size();
}

std::optional<RationalVector> SolveRational(const IntMatrix& b,
                                            std::span<const Integer> target) {
  assert(target.size() == b.rows());
  const std::size_t n = b.cols();
  IntMatrix augmented(b.rows(), n + 1);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::copy(b.row(i).begin(), b.row(i).end(), augmented.row(i).begin());
    augmented(i, n) = target[i];
  }
  auto e = FractionFreeEliminate(std::move(augmented), n);
  const std::size_t rank = e.pivot_columns.size();
  for (std::size_t i = rank; i < e.m.rows(); ++i) {
    if (!e.m(i, n).is_zero()) return std::nullopt;
  }

  RationalVector y(n);
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t pc = e.pivot_columns[i];
    Rational acc(e.m(i, n));
    for (std::size_t k = pc + 1; k < n; ++k) {
      if (!e.m(i, k).is_zero() && !y[k].is_zero()) acc -= Rational(e.m(i, k)) * y[k];
    }
    y[pc] = acc / Rational(e.m(i, pc));
  }
  return y;
}

std::size_t HammingWeight(std::span<const Rational> v) {
  return static_cast<std::size_t>(std::count_if(
      v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); }));
}

}  // namespace gapcover
