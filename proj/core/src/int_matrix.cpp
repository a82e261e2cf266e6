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


#include "gapcover/int_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "json.hpp"

namespace gapcover {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    assert(r.size() == cols_);
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::Identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::FromRows(const std::vector<IntVector>& rows,
                              std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntVector IntMatrix::RowVector(std::size_t i) const {
  auto r = row(i);
  return IntVector(r.begin(), r.end());
}

IntVector IntMatrix::ColumnVector(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void IntMatrix::SwapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

IntMatrix IntMatrix::Transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::Multiply(std::span<const Integer> x) const {
  assert(x.size() == cols_);
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!x[j].is_zero() && !(*this)(i, j).is_zero()) acc += (*this)(i, j) * x[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

IntMatrix AppendOnesColumn(const IntMatrix& b) {
  IntMatrix out(b.rows(), b.cols() + 1);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::copy(b.row(i).begin(), b.row(i).end(), out.row(i).begin());
    out(i, b.cols()) = 1;
  }
  return out;
}

bool IsZero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Integer& x) { return x.is_zero(); });
}

namespace {

nlohmann::json ToJson(std::span<const Integer> v) {
  auto arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

}  // namespace

std::string DumpJson(const IntMatrix& m) {
  auto arr = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(ToJson(m.row(i)));
  return arr.dump();
}

std::string DumpJson(std::span<const Integer> v) { return ToJson(v).dump(); }

}  // namespace gapcover
