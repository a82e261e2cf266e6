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


#include "gapcover/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "gapcover/errors.hpp"
#include "gapcover/hermite.hpp"

namespace gapcover {

LatticeBasis LatticeBasis::FromGenerators(
    std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  LatticeBasis out(ambient_dim);
  if (generators.empty() || ambient_dim == 0) return out;
  auto hnf = HermiteNormalForm(IntMatrix::FromRows(generators, ambient_dim));
  for (std::size_t i = 0; i < hnf.rank(); ++i) {
    out.vectors_.push_back(hnf.form.RowVector(i));
  }
  out.pivots_ = std::move(hnf.pivot_columns);
  return out;
}

std::optional<IntVector> LatticeBasis::Coordinates(
    std::span<const Integer> x) const {
  if (x.size() != ambient_dim_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "vector of length " + std::to_string(x.size()) +
                    " tested against lattice in dimension " +
                    std::to_string(ambient_dim_));
  }
  IntVector rest(x.begin(), x.end());
  IntVector coords(rank());
  // Echelon form: the pivot column of row i is zero in every later row.
  for (std::size_t i = 0; i < rank(); ++i) {
    const Integer& pivot = vectors_[i][pivots_[i]];
    const Integer& value = rest[pivots_[i]];
    if (value.is_zero()) continue;
    if (!(value % pivot).is_zero()) return std::nullopt;
    Integer c = value / pivot;
    for (std::size_t k = pivots_[i]; k < ambient_dim_; ++k) {
      if (!vectors_[i][k].is_zero()) rest[k] -= c * vectors_[i][k];
    }
    coords[i] = std::move(c);
  }
  if (!IsZero(rest)) return std::nullopt;
  return coords;
}

LatticeBasis LatticeBasis::Embedded(std::size_t new_dim) const {
  assert(new_dim >= ambient_dim_);
  LatticeBasis out(new_dim);
  out.pivots_ = pivots_;
  for (const auto& v : vectors_) {
    IntVector padded = v;
    padded.resize(new_dim);
    out.vectors_.push_back(std::move(padded));
  }
  return out;
}

LatticeBasis KernelLatticeBasis(const IntMatrix& b) {
  const std::size_t n = b.cols();
  if (n == 0) return LatticeBasis(0);
  if (b.rows() == 0) {
    std::vector<IntVector> unit(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i) unit[i][i] = 1;
    return LatticeBasis::FromGenerators(n, unit);
  }
  auto echelon = HermiteNormalForm(
      b.Transposed(), {.track_transform = true, .reduce_above_pivots = false});
  std::vector<IntVector> kernel;
  for (std::size_t i = echelon.rank(); i < n; ++i) {
    kernel.push_back(echelon.transform.RowVector(i));
  }
  return LatticeBasis::FromGenerators(n, kernel);
}

namespace {

// Brings both lattices to the same ambient dimension per the documented
// inclusion Z^d -> Z^(d+1).
std::pair<LatticeBasis, LatticeBasis> Align(const LatticeBasis& a,
                                            const LatticeBasis& b) {
  const std::size_t da = a.ambient_dim();
  const std::size_t db = b.ambient_dim();
  if (da == db) return {a, b};
  if (da + 1 == db) return {a.Embedded(db), b};
  if (db + 1 == da) return {a, b.Embedded(da)};
  throw Error(ErrorKind::kDimensionMismatch,
              "lattices in Z^" + std::to_string(da) + " and Z^" +
                  std::to_string(db) + " are not related by inclusion");
}

}  // namespace

bool LatticeEqual(const LatticeBasis& a, const LatticeBasis& b) {
  auto [x, y] = Align(a, b);
  return x == y;
}

std::vector<std::size_t> ZeroCoordinatePositions(const LatticeBasis& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < lattice.ambient_dim(); ++k) {
    bool all_zero = std::all_of(
        lattice.vectors().begin(), lattice.vectors().end(),
        [k](const IntVector& v) { return v[k].is_zero(); });
    if (all_zero) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> SupportUnion(const LatticeBasis& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < lattice.ambient_dim(); ++k) {
    bool any = std::any_of(lattice.vectors().begin(), lattice.vectors().end(),
                           [k](const IntVector& v) { return !v[k].is_zero(); });
    if (any) out.push_back(k);
  }
  return out;
}

std::optional<IntVector> LatticeDifferenceVector(const LatticeBasis& big,
                                                 const LatticeBasis& small) {
  if (small.ambient_dim() != big.ambient_dim() &&
      small.ambient_dim() + 1 != big.ambient_dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "sublattice in Z^" + std::to_string(small.ambient_dim()) +
                    " cannot be included in Z^" +
                    std::to_string(big.ambient_dim()));
  }
  const LatticeBasis inner = small.Embedded(big.ambient_dim());
  for (const auto& v : inner.vectors()) {
    if (!big.Contains(v)) {
      throw Error(ErrorKind::kInclusionViolation,
                  "sublattice generator " + DumpJson(v) +
                      " is not in the enclosing lattice");
    }
  }
  if (inner.rank() == big.rank() && inner == big) return std::nullopt;

  // HNF with pivots taken from the last coordinate backwards.
  const std::size_t dim = big.ambient_dim();
  std::vector<IntVector> reversed;
  for (const auto& v : big.vectors()) reversed.emplace_back(v.rbegin(), v.rend());
  auto hnf = HermiteNormalForm(IntMatrix::FromRows(reversed, dim));
  for (std::size_t i = 0; i < hnf.rank(); ++i) {
    auto r = hnf.form.row(i);
    IntVector candidate(r.rbegin(), r.rend());
    if (!inner.Contains(candidate)) return candidate;
  }
  // Every generator of big lies in small, so the lattices coincide.
  return std::nullopt;
}

Integer ProjectionNormSq(std::span<const Integer> x,
                         std::span<const std::size_t> positions) {
  Integer acc = 0;
  for (std::size_t i : positions) {
    assert(i < x.size());
    acc += x[i] * x[i];
  }
  return acc;
}

std::size_t SupportSize(std::span<const Integer> x) {
  return static_cast<std::size_t>(std::count_if(
      x.begin(), x.end(), [](const Integer& v) { return !v.is_zero(); }));
}

}  // namespace gapcover
