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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gapcover {

// GMP-backed, with expression templates off so arithmetic yields values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix Identity(std::size_t n);
  static IntMatrix FromRows(const std::vector<IntVector>& rows,
                            std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<Integer> row(std::size_t i) {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  IntVector RowVector(std::size_t i) const;
  IntVector ColumnVector(std::size_t j) const;

  void SwapRows(std::size_t a, std::size_t b);

  IntMatrix Transposed() const;
  IntVector Multiply(std::span<const Integer> x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// Returns (B | 1): B with an all-ones column appended as the last column.
IntMatrix AppendOnesColumn(const IntMatrix& b);

bool IsZero(std::span<const Integer> v);

// Debug dump as a JSON array of rows of decimal strings.
std::string DumpJson(const IntMatrix& m);
std::string DumpJson(std::span<const Integer> v);

}  // namespace gapcover
