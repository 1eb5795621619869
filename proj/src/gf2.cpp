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

#include "hkp/gf2.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hkp/error.hpp"

namespace hkp {

namespace {

int leading_bit(std::uint64_t v) { return 63 - std::countl_zero(v); }

}  // namespace

Gf2Matrix::Gf2Matrix(int width, std::vector<BitVec> rows) : width_(width), rows_(std::move(rows)) {
  require(width >= 0 && width <= kMaxWidth, "Gf2Matrix width out of range");
  for (const auto& r : rows_) require(r.width() == width_, "Gf2Matrix rows must share the matrix width");
}

void Gf2Matrix::add_row(const BitVec& row) {
  require(row.width() == width_, "Gf2Matrix rows must share the matrix width");
  rows_.push_back(row);
}

Gf2Subspace Gf2Subspace::zero(int width) { return row_reduce(Gf2Matrix(width)); }

Gf2Subspace Gf2Subspace::full(int width) {
  Gf2Matrix m(width);
  for (int i = 1; i <= width; ++i) m.add_row(BitVec::zeros(width).flipped(i));
  return row_reduce(m);
}

BitVec Gf2Subspace::reduce(const BitVec& v) const {
  require(v.width() == width_, "reduce: width mismatch");
  std::uint64_t x = v.value();
  for (const auto& b : basis_)
    if ((x >> leading_bit(b.value())) & 1u) x ^= b.value();
  return BitVec(width_, x);
}

bool Gf2Subspace::contains(const BitVec& v) const { return reduce(v).is_zero(); }

std::vector<BitVec> Gf2Subspace::elements() const {
  require(dim() <= 26, "elements: subspace too large to list");
  std::vector<BitVec> out;
  out.reserve(size());
  for (std::uint64_t mask = 0; mask < size(); ++mask) {
    std::uint64_t x = 0;
    for (int i = 0; i < dim(); ++i)
      if ((mask >> i) & 1u) x ^= basis_[i].value();
    out.emplace_back(width_, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Gf2Subspace row_reduce(const Gf2Matrix& m) {
  std::vector<std::uint64_t> rows;
  for (const auto& r : m.rows()) {
    std::uint64_t x = r.value();
    for (auto b : rows)
      if ((x >> leading_bit(b)) & 1u) x ^= b;
    if (x == 0) continue;
    const int p = leading_bit(x);
    for (auto& b : rows)
      if ((b >> p) & 1u) b ^= x;
    rows.push_back(x);
  }
  // Highest pivot (coordinate closest to 1) first.
  std::sort(rows.begin(), rows.end(), std::greater<>());
  std::vector<BitVec> basis;
  basis.reserve(rows.size());
  for (auto r : rows) basis.emplace_back(m.width(), r);
  return Gf2Subspace(m.width(), std::move(basis));
}

Gf2Subspace nullspace(const Gf2Subspace& s) {
  const int w = s.width();
  std::uint64_t pivots = 0;
  for (const auto& b : s.basis()) pivots |= std::uint64_t{1} << leading_bit(b.value());
  Gf2Matrix out(w);
  for (int f = 0; f < w; ++f) {
    if ((pivots >> f) & 1u) continue;
    // Free coordinate f set; each pivot coordinate solves its row's equation.
    std::uint64_t v = std::uint64_t{1} << f;
    for (const auto& b : s.basis())
      if ((b.value() >> f) & 1u) v |= std::uint64_t{1} << leading_bit(b.value());
    out.add_row(BitVec(w, v));
  }
  return row_reduce(out);
}

bool perp_involution_check(const Gf2Subspace& s) { return nullspace(nullspace(s)) == s; }

std::int64_t character_sum(const Gf2Subspace& d, const BitVec& g) {
  require(g.width() == d.width(), "character_sum: width mismatch");
  std::int64_t sum = 0;
  for (const auto& x : d.elements()) sum += dot(g, x) ? -1 : 1;
  return sum;
}

std::vector<Gf2Subspace> all_subspaces(int width) {
  require(width >= 0 && width <= 6, "all_subspaces: width must be in [0, 6]");
  std::set<Gf2Subspace> seen{Gf2Subspace::zero(width)};
  std::vector<Gf2Subspace> frontier{Gf2Subspace::zero(width)};
  while (!frontier.empty()) {
    std::vector<Gf2Subspace> next;
    for (const auto& s : frontier) {
      for (std::uint64_t v = 1; v < (std::uint64_t{1} << width); ++v) {
        BitVec bv(width, v);
        if (s.contains(bv)) continue;
        Gf2Matrix m(width, {s.basis().begin(), s.basis().end()});
        m.add_row(bv);
        auto t = row_reduce(m);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace hkp
