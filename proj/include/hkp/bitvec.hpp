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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hkp {

/// Widest vector the GF(2) layer handles (pairs of elements need 2n bits).
inline constexpr int kMaxWidth = 64;
/// Largest power exponent n for elements of B^n.
inline constexpr int kMaxElementBits = 24;

/// An element of {0,1}^n. Coordinate 1 is the most significant bit of
/// value(), so the printed string reads coordinate 1 first and the integer
/// order agrees with lexicographic order of the strings.
class BitVec {
 public:
  BitVec() = default;
  BitVec(int width, std::uint64_t value);

  static BitVec zeros(int width) { return BitVec(width, 0); }
  static BitVec parse(std::string_view text);

  int width() const { return width_; }
  std::uint64_t value() const { return bits_; }
  std::uint64_t mask() const { return mask_for(width_); }

  /// 1-based coordinate access.
  bool coord(int i) const;
  BitVec flipped(int i) const;

  int popcount() const;
  bool is_zero() const { return bits_ == 0; }
  /// Coordinatewise order: every 1 of *this is a 1 of other.
  bool leq(const BitVec& other) const;

  std::string str() const;

  friend BitVec operator^(const BitVec& a, const BitVec& b);
  friend BitVec operator&(const BitVec& a, const BitVec& b);
  friend BitVec operator|(const BitVec& a, const BitVec& b);
  BitVec operator~() const { return BitVec(width_, ~bits_ & mask()); }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  static constexpr std::uint64_t mask_for(int width) {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  }

 private:
  int width_ = 0;
  std::uint64_t bits_ = 0;
};

/// Mod-2 inner product.
bool dot(const BitVec& a, const BitVec& b);

/// k-ary Boolean operation, k <= 4. Row r holds the output on the input
/// tuple whose binary reading (x1 most significant) is r.
class TruthTable {
 public:
  static constexpr int kMaxArity = 4;

  TruthTable() = default;
  TruthTable(int arity, std::uint16_t table);

  /// `bits` lists the outputs for rows 0, 1, ..., 2^k - 1.
  static TruthTable parse(int arity, std::string_view bits);
  static TruthTable projection(int arity, int index);  // index is 1-based
  static TruthTable constant(bool value);

  template <typename F>
  static TruthTable from_function(int arity, F&& f) {
    std::uint16_t t = 0;
    std::vector<std::uint8_t> args(static_cast<std::size_t>(arity));
    for (unsigned row = 0; row < (1u << arity); ++row) {
      for (int i = 0; i < arity; ++i) args[i] = (row >> (arity - 1 - i)) & 1u;
      if (f(std::span<const std::uint8_t>(args))) t |= static_cast<std::uint16_t>(1u << row);
    }
    return TruthTable(arity, t);
  }

  int arity() const { return arity_; }
  int rows() const { return 1 << arity_; }
  std::uint16_t bits() const { return table_; }
  bool at(unsigned row) const { return (table_ >> row) & 1u; }

  std::string str() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
  friend std::strong_ordering operator<=>(const TruthTable&, const TruthTable&) = default;

 private:
  int arity_ = 0;
  std::uint16_t table_ = 0;
};

/// The operations appearing in the clone catalog.
namespace ops {
TruthTable zero();
TruthTable one();
TruthTable negation();     // ¬x
TruthTable meet();         // x ∧ y
TruthTable join();         // x ∨ y
TruthTable sum2();         // x + y
TruthTable sum3();         // x + y + z
TruthTable biconditional();  // x ↔ y
TruthTable majority();     // maj(x,y,z)
TruthTable join_of_meet();   // x ∨ (y ∧ z)
TruthTable meet_of_join();   // x ∧ (y ∨ z)
}  // namespace ops

bool eval_op(const TruthTable& op, std::span<const std::uint8_t> args);

/// Applies `op` to bit-sliced inputs: bit j of the result is op evaluated on
/// bit j of each input. Bits outside `mask` are cleared.
std::uint64_t apply_sliced(const TruthTable& op, std::span<const std::uint64_t> inputs,
                           std::uint64_t mask);

/// Componentwise extension of `op` to B^n. `width` is only consulted for
/// 0-ary operations, which have no argument to take n from.
BitVec lift_pointwise(const TruthTable& op, std::span<const BitVec> args, int width = -1);

/// A term over Boolean operations: either a variable or an operation applied
/// to subterms. Constants are applications of 0-ary tables.
class Term {
 public:
  static Term variable(int index);  // 0-based
  static Term apply(TruthTable op, std::vector<Term> children);

  bool is_variable() const { return var_ >= 0; }
  int variable_index() const { return var_; }
  const TruthTable& op() const { return op_; }
  const std::vector<Term>& children() const { return children_; }

  /// One more than the largest variable index used (0 for ground terms).
  int variables_used() const;

  /// The term operation as an arity-k table; k must cover every variable.
  TruthTable tabulate(int arity) const;

 private:
  Term() = default;
  int var_ = -1;
  TruthTable op_;
  std::vector<Term> children_;
};

bool eval_term(const Term& t, std::span<const std::uint8_t> env);

}  // namespace hkp
