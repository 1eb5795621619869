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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hkp/bitvec.hpp"
#include "hkp/clone.hpp"

namespace hkp {

/// Equivalence relation on {0,1}^n in canonical form: every element is
/// labelled by the least member (integer order) of its block. Compatibility
/// with an algebra is a separate question, see is_congruence().
class Congruence {
 public:
  static Congruence identity(int n);
  static Congruence total(int n);
  /// Any labelling where equal labels mean "same block"; canonicalized here.
  static Congruence from_labels(int n, std::span<const std::uint64_t> labels);
  /// Throws InvalidInput unless the blocks partition {0,1}^n.
  static Congruence from_blocks(int n, const std::vector<std::vector<BitVec>>& blocks);

  int n() const { return n_; }
  std::uint64_t element_count() const { return std::uint64_t{1} << n_; }

  /// Least member of x's block.
  std::uint64_t rep(std::uint64_t x) const { return rep_[x]; }
  bool related(std::uint64_t a, std::uint64_t b) const { return rep_[a] == rep_[b]; }
  bool related(const BitVec& a, const BitVec& b) const;

  std::size_t num_blocks() const;
  /// Blocks ordered by least member, members ascending.
  std::vector<std::vector<std::uint64_t>> blocks() const;
  /// The block of 0^n.
  std::vector<std::uint64_t> zero_block() const;

  bool is_identity() const;
  bool is_total() const;
  /// this ⊆ other as sets of pairs.
  bool refines(const Congruence& other) const;

  std::span<const std::uint32_t> labels() const { return rep_; }

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend std::strong_ordering operator<=>(const Congruence& a, const Congruence& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.rep_.begin(), a.rep_.end(), b.rep_.begin(), b.rep_.end());
  }

 private:
  Congruence(int n, std::vector<std::uint32_t> rep) : n_(n), rep_(std::move(rep)) {}
  int n_ = 0;
  std::vector<std::uint32_t> rep_;
};

Congruence meet(const Congruence& a, const Congruence& b);
/// Equivalence join (transitive closure of the union).
Congruence join(const Congruence& a, const Congruence& b);

using ElementPair = std::pair<BitVec, BitVec>;
using PairSet = std::vector<ElementPair>;

/// Unary basic translations of B^n: x ↦ f(c1, ..., x, ..., ck) for a
/// generator f and constants ci in B^n. Each coordinate of such a map is one
/// of the four unary Boolean functions, chosen from the set the generator
/// allows at that argument position, so the maps are enumerated as products
/// of per-coordinate choices.
class Translations {
 public:
  Translations(const GeneratorSet& gens, int n);

  struct Map {
    std::uint64_t keep;    // coordinates copied from x
    std::uint64_t negate;  // coordinates taken from ¬x
    std::uint64_t ones;    // coordinates fixed to 1
    std::uint64_t operator()(std::uint64_t x) const { return (x & keep) | (~x & negate) | ones; }
  };

  /// Number of maps for_each() visits.
  std::uint64_t count() const;

  template <typename F>
  void for_each(F&& f) const {
    for (unsigned choices : choice_sets_) walk(choices, 0, Map{0, 0, 0}, f);
  }

 private:
  template <typename F>
  void walk(unsigned choices, int coord, Map m, F& f) const {
    if (coord == n_) {
      f(m);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << coord;
    for (unsigned code = 0; code < 4; ++code) {
      if (!((choices >> code) & 1u)) continue;
      Map next = m;
      // code bit 0 = u(0), bit 1 = u(1).
      if (code == 1) next.negate |= bit;
      if (code == 2) next.keep |= bit;
      if (code == 3) next.ones |= bit;
      walk(choices, coord + 1, next, f);
    }
  }

  int n_;
  std::vector<unsigned> choice_sets_;
};

/// Exhaustive compatibility test of the equivalence with every generator.
bool is_congruence(const Congruence& theta, const GeneratorSet& gens);

/// Least congruence of (gens)^n containing the pairs.
Congruence cg(const PairSet& pairs, const GeneratorSet& gens, int n);
Congruence cg(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs, const GeneratorSet& gens, int n);

inline constexpr int kMaxEnumerationBits = 4;

/// All congruences of (gens)^n, n <= 4, sorted canonically. Throws
/// CapacityExceeded for larger n or when the lattice exceeds `max_count`.
std::vector<Congruence> enumerate_congruences(const GeneratorSet& gens, int n,
                                              std::size_t max_count = 100'000);

/// Size of a smallest subset of theta's pairs generating theta, searching
/// sizes 0..budget (budget <= 3). nullopt means the minimum exceeds budget.
std::optional<int> min_generating_pairs(const Congruence& theta, const GeneratorSet& gens, int budget);

/// ker(proj_I): a ~ b iff a and b agree on every coordinate in I (1-based).
Congruence projection_kernel(int n, std::span<const int> coords);

}  // namespace hkp
