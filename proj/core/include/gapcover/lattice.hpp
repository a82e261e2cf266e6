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

// A lattice in Z^ambient_dim, held as the nonzero rows of the Hermite normal
// form of its generators. Equal lattices have identical representations.
// The zero lattice has no vectors.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  explicit LatticeBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  // Generators may be linearly dependent; they are reduced to a basis.
  static LatticeBasis FromGenerators(std::size_t ambient_dim,
                                     const std::vector<IntVector>& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return vectors_.size(); }
  bool is_zero() const { return vectors_.empty(); }
  const std::vector<IntVector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  // Integer coordinates of x in this basis, or nullopt if x is not a lattice
  // point.
  std::optional<IntVector> Coordinates(std::span<const Integer> x) const;
  bool Contains(std::span<const Integer> x) const {
    return Coordinates(x).has_value();
  }

  // Image under x -> (x, 0, ..., 0) in Z^new_dim.
  LatticeBasis Embedded(std::size_t new_dim) const;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> vectors_;
  std::vector<std::size_t> pivots_;
};

// Basis of {x in Z^cols : B x = 0}. Row-reduces (B^T | I) with unimodular
// operations; transform rows paired with zero rows of the echelon form span
// the kernel lattice.
LatticeBasis KernelLatticeBasis(const IntMatrix& b);

// Equality as point sets. When ambient dims differ by one, the smaller lattice
// is embedded by appending a zero coordinate. Throws kDimensionMismatch
// otherwise.
bool LatticeEqual(const LatticeBasis& a, const LatticeBasis& b);

// Ascending coordinate indices at which every basis vector vanishes. All
// indices for the zero lattice.
std::vector<std::size_t> ZeroCoordinatePositions(const LatticeBasis& lattice);

// Union of basis supports; complement of ZeroCoordinatePositions.
std::vector<std::size_t> SupportUnion(const LatticeBasis& lattice);

// A vector of `big` outside `small` (embedded into big's dimension when one
// shorter), or nullopt when they are equal. Picks the generator of the HNF
// taken over reversed coordinates, so the returned vector's last coordinate
// is the positive gcd of all last coordinates in `big` whenever that gcd is
// nonzero. Throws kInclusionViolation when small is not contained in big.
std::optional<IntVector> LatticeDifferenceVector(const LatticeBasis& big,
                                                 const LatticeBasis& small);

// Sum of x_i^2 over the given positions.
Integer ProjectionNormSq(std::span<const Integer> x,
                         std::span<const std::size_t> positions);

std::size_t SupportSize(std::span<const Integer> x);

}  // namespace gapcover
