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

#include "hkp/bitvec.hpp"

#include <algorithm>
#include <bit>

#include "hkp/error.hpp"

namespace hkp {

BitVec::BitVec(int width, std::uint64_t value) : width_(width), bits_(value) {
  require(width >= 0 && width <= kMaxWidth, "BitVec width out of range");
  require((value & ~mask_for(width)) == 0, "BitVec value has bits beyond its width");
}

BitVec BitVec::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxWidth))
    throw InvalidInput("bit string longer than " + std::to_string(kMaxWidth));
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidInput("bit string may only contain 0 and 1");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BitVec(static_cast<int>(text.size()), v);
}

bool BitVec::coord(int i) const {
  require(i >= 1 && i <= width_, "coordinate index out of range");
  return (bits_ >> (width_ - i)) & 1u;
}

BitVec BitVec::flipped(int i) const {
  require(i >= 1 && i <= width_, "coordinate index out of range");
  return BitVec(width_, bits_ ^ (std::uint64_t{1} << (width_ - i)));
}

int BitVec::popcount() const { return std::popcount(bits_); }

bool BitVec::leq(const BitVec& other) const {
  require(width_ == other.width_, "comparing vectors of different widths");
  return (bits_ & ~other.bits_) == 0;
}

std::string BitVec::str() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i)
    if ((bits_ >> (width_ - 1 - i)) & 1u) s[i] = '1';
  return s;
}

BitVec operator^(const BitVec& a, const BitVec& b) {
  require(a.width_ == b.width_, "xor of vectors of different widths");
  return BitVec(a.width_, a.bits_ ^ b.bits_);
}

BitVec operator&(const BitVec& a, const BitVec& b) {
  require(a.width_ == b.width_, "and of vectors of different widths");
  return BitVec(a.width_, a.bits_ & b.bits_);
}

BitVec operator|(const BitVec& a, const BitVec& b) {
  require(a.width_ == b.width_, "or of vectors of different widths");
  return BitVec(a.width_, a.bits_ | b.bits_);
}

bool dot(const BitVec& a, const BitVec& b) {
  require(a.width() == b.width(), "dot product of vectors of different widths");
  return std::popcount(a.value() & b.value()) & 1;
}

TruthTable::TruthTable(int arity, std::uint16_t table) : arity_(arity), table_(table) {
  require(arity >= 0 && arity <= kMaxArity, "truth table arity must be in [0, 4]");
  const unsigned rows = 1u << arity;
  if (rows < 16) require((table >> rows) == 0, "truth table has entries beyond 2^arity rows");
}

TruthTable TruthTable::parse(int arity, std::string_view bits) {
  if (arity < 0 || arity > kMaxArity) throw InvalidInput("truth table arity must be in [0, 4]");
  if (bits.size() != (std::size_t{1} << arity))
    throw InvalidInput("truth table for arity " + std::to_string(arity) + " needs " +
                       std::to_string(1 << arity) + " entries");
  std::uint16_t t = 0;
  for (std::size_t r = 0; r < bits.size(); ++r) {
    if (bits[r] != '0' && bits[r] != '1') throw InvalidInput("truth table entries must be 0 or 1");
    if (bits[r] == '1') t |= static_cast<std::uint16_t>(1u << r);
  }
  return TruthTable(arity, t);
}

TruthTable TruthTable::projection(int arity, int index) {
  require(index >= 1 && index <= arity, "projection index out of range");
  return from_function(arity, [index](std::span<const std::uint8_t> a) { return a[index - 1] != 0; });
}

TruthTable TruthTable::constant(bool value) { return TruthTable(0, value ? 1 : 0); }

std::string TruthTable::str() const {
  std::string s(static_cast<std::size_t>(rows()), '0');
  for (int r = 0; r < rows(); ++r)
    if (at(static_cast<unsigned>(r))) s[r] = '1';
  return s;
}

namespace ops {
TruthTable zero() { return TruthTable::constant(false); }
TruthTable one() { return TruthTable::constant(true); }
TruthTable negation() { return TruthTable::parse(1, "10"); }
TruthTable meet() { return TruthTable::parse(2, "0001"); }
TruthTable join() { return TruthTable::parse(2, "0111"); }
TruthTable sum2() { return TruthTable::parse(2, "0110"); }
TruthTable sum3() { return TruthTable::parse(3, "01101001"); }
TruthTable biconditional() { return TruthTable::parse(2, "1001"); }
TruthTable majority() { return TruthTable::parse(3, "00010111"); }
TruthTable join_of_meet() {
  return TruthTable::from_function(3, [](auto a) { return a[0] || (a[1] && a[2]); });
}
TruthTable meet_of_join() {
  return TruthTable::from_function(3, [](auto a) { return a[0] && (a[1] || a[2]); });
}
}  // namespace ops

bool eval_op(const TruthTable& op, std::span<const std::uint8_t> args) {
  require(static_cast<int>(args.size()) == op.arity(), "eval_op: argument count differs from arity");
  unsigned row = 0;
  for (auto a : args) {
    require(a <= 1, "eval_op: arguments must be bits");
    row = (row << 1) | a;
  }
  return op.at(row);
}

std::uint64_t apply_sliced(const TruthTable& op, std::span<const std::uint64_t> inputs,
                           std::uint64_t mask) {
  const int k = op.arity();
  require(static_cast<int>(inputs.size()) == k, "apply_sliced: input count differs from arity");
  std::uint64_t out = 0;
  for (unsigned row = 0; row < (1u << k); ++row) {
    if (!op.at(row)) continue;
    std::uint64_t term = mask;
    for (int i = 0; i < k; ++i) term &= ((row >> (k - 1 - i)) & 1u) ? inputs[i] : ~inputs[i];
    out |= term;
  }
  return out & mask;
}

BitVec lift_pointwise(const TruthTable& op, std::span<const BitVec> args, int width) {
  require(static_cast<int>(args.size()) == op.arity(), "lift_pointwise: argument count differs from arity");
  if (args.empty()) require(width >= 0, "lift_pointwise: a 0-ary operation needs an explicit width");
  const int n = args.empty() ? width : args.front().width();
  std::uint64_t raw[TruthTable::kMaxArity];
  for (std::size_t i = 0; i < args.size(); ++i) {
    require(args[i].width() == n, "lift_pointwise: arguments of mixed length");
    raw[i] = args[i].value();
  }
  return BitVec(n, apply_sliced(op, std::span<const std::uint64_t>(raw, args.size()), BitVec::mask_for(n)));
}

Term Term::variable(int index) {
  require(index >= 0, "variable index must be non-negative");
  Term t;
  t.var_ = index;
  return t;
}

Term Term::apply(TruthTable op, std::vector<Term> children) {
  require(static_cast<int>(children.size()) == op.arity(), "term application: child count differs from arity");
  Term t;
  t.op_ = op;
  t.children_ = std::move(children);
  return t;
}

int Term::variables_used() const {
  if (is_variable()) return var_ + 1;
  int m = 0;
  for (const auto& c : children_) m = std::max(m, c.variables_used());
  return m;
}

TruthTable Term::tabulate(int arity) const {
  require(variables_used() <= arity, "tabulate: arity does not cover the term's variables");
  return TruthTable::from_function(arity, [this](std::span<const std::uint8_t> env) { return eval_term(*this, env); });
}

bool eval_term(const Term& t, std::span<const std::uint8_t> env) {
  if (t.is_variable()) {
    if (t.variable_index() >= static_cast<int>(env.size()))
      throw ContractViolation("eval_term: unbound variable x" + std::to_string(t.variable_index() + 1));
    return env[static_cast<std::size_t>(t.variable_index())] != 0;
  }
  std::uint8_t args[TruthTable::kMaxArity];
  for (std::size_t i = 0; i < t.children().size(); ++i) args[i] = eval_term(t.children()[i], env) ? 1 : 0;
  return eval_op(t.op(), std::span<const std::uint8_t>(args, t.children().size()));
}

}  // namespace hkp
