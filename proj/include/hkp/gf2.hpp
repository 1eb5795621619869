// Copyright 2026 The HKP Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hkp/bitvec.hpp"

namespace hkp {

/// Rows of a common width w over GF(2).
class Gf2Matrix {
 public:
  explicit Gf2Matrix(int width, std::vector<BitVec> rows = {});

  int width() const { return width_; }
  std::span<const BitVec> rows() const { return rows_; }
  void add_row(const BitVec& row);

 private:
  int width_;
  std::vector<BitVec> rows_;
};

/// A subspace of GF(2)^w held as its reduced row echelon basis. Pivots are
/// leading coordinates (coordinate 1 first), so two subspaces are equal iff
/// their bases are.
class Gf2Subspace {
 public:
  static Gf2Subspace zero(int width);
  static Gf2Subspace full(int width);

  int width() const { return width_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::span<const BitVec> basis() const { return basis_; }
  /// 2^dim; dim is capped where elements() is used.
  std::uint64_t size() const { return std::uint64_t{1} << basis_.size(); }

  bool contains(const BitVec& v) const;
  /// Canonical representative of v + S (all pivot coordinates cleared).
  BitVec reduce(const BitVec& v) const;
  /// Every vector of the subspace, ascending. Requires dim <= 26.
  std::vector<BitVec> elements() const;

  friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;
  friend auto operator<=>(const Gf2Subspace& a, const Gf2Subspace& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.basis_.begin(), a.basis_.end(), b.basis_.begin(),
                                                  b.basis_.end());
  }

 private:
  friend Gf2Subspace row_reduce(const Gf2Matrix& m);
  Gf2Subspace(int width, std::vector<BitVec> basis) : width_(width), basis_(std::move(basis)) {}
  int width_ = 0;
  std::vector<BitVec> basis_;
};

Gf2Subspace row_reduce(const Gf2Matrix& m);
inline int rank(const Gf2Matrix& m) { return row_reduce(m).dim(); }

/// Orthogonal complement {v : v·b = 0 for every b in s}.
Gf2Subspace nullspace(const Gf2Subspace& s);

bool perp_involution_check(const Gf2Subspace& s);

/// Σ_{d ∈ D} (−1)^{g·d}, by enumerating D.
std::int64_t character_sum(const Gf2Subspace& d, const BitVec& g);

/// Every subspace of GF(2)^w, sorted; w <= 6.
std::vector<Gf2Subspace> all_subspaces(int width);

}  // namespace hkp
