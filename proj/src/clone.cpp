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

#include "hkp/clone.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "hkp/error.hpp"

namespace hkp {

GeneratorSet::GeneratorSet(std::vector<TruthTable> ops) : ops_(std::move(ops)) {
  std::sort(ops_.begin(), ops_.end());
  ops_.erase(std::unique(ops_.begin(), ops_.end()), ops_.end());
}

int GeneratorSet::max_arity() const {
  int m = 0;
  for (const auto& op : ops_) m = std::max(m, op.arity());
  return m;
}

bool GeneratorSet::contains(const TruthTable& op) const {
  return std::binary_search(ops_.begin(), ops_.end(), op);
}

namespace {

constexpr std::array<CloneId, 11> kAllClones = {
    CloneId::Bottom, CloneId::Meet, CloneId::Join, CloneId::U,  CloneId::MPT0, CloneId::MPT1,
    CloneId::AP,     CloneId::AP0,  CloneId::A,    CloneId::DM, CloneId::Top};

constexpr std::array<std::string_view, 11> kAsciiIds = {"BOT", "MEET", "JOIN", "U",  "MPT0", "MPT1",
                                                        "AP",  "AP0",  "A",    "DM", "TOP"};

// Semi-naive fixpoint over arity-k tables. Returns early once `target` shows up.
bool close_over(const GeneratorSet& gens, int k, std::optional<std::uint16_t> target,
                std::vector<std::uint16_t>* out) {
  const unsigned rows = 1u << k;
  const std::uint64_t mask = rows == 64 ? ~0ull : ((1ull << rows) - 1);
  std::vector<bool> seen(std::size_t{1} << rows, false);
  std::vector<std::uint16_t> members;

  auto add = [&](std::uint64_t t) {
    auto v = static_cast<std::uint16_t>(t);
    if (seen[v]) return false;
    seen[v] = true;
    members.push_back(v);
    return target && *target == v;
  };

  bool found = false;
  for (int i = 1; i <= k && !found; ++i) found = add(TruthTable::projection(k, i).bits());

  std::size_t old_size = 0;
  std::array<std::uint64_t, TruthTable::kMaxArity> inputs{};
  std::array<std::size_t, TruthTable::kMaxArity> idx{};

  while (!found) {
    const std::size_t cur = members.size();
    for (const auto& g : gens.ops()) {
      const int m = g.arity();
      if (m == 0) {
        if (old_size == 0) found = add(apply_sliced(g, {}, mask));
        if (found) break;
        continue;
      }
      // Tuples whose first index in [old_size, cur) sits at position p; earlier
      // positions range over the old members only, later ones over everything.
      for (int p = 0; p < m && !found; ++p) {
        auto lo = [&](int pos) -> std::size_t { return pos == p ? old_size : 0; };
        auto hi = [&](int pos) -> std::size_t { return pos < p ? old_size : cur; };
        bool empty_range = false;
        for (int pos = 0; pos < m; ++pos) {
          idx[pos] = lo(pos);
          if (idx[pos] >= hi(pos)) empty_range = true;
        }
        if (empty_range) continue;
        while (true) {
          for (int pos = 0; pos < m; ++pos) inputs[pos] = members[idx[pos]];
          if (add(apply_sliced(g, std::span<const std::uint64_t>(inputs.data(), m), mask))) {
            found = true;
            break;
          }
          int pos = m - 1;
          while (pos >= 0) {
            if (++idx[pos] < hi(pos)) break;
            idx[pos] = lo(pos);
            --pos;
          }
          if (pos < 0) break;
        }
      }
      if (found) break;
    }
    if (members.size() == cur) break;
    old_size = cur;
  }
  if (out) *out = std::move(members);
  return found;
}

}  // namespace

std::span<const CloneId> all_named_clones() { return kAllClones; }

std::string_view ascii_id(CloneId id) { return kAsciiIds[static_cast<std::size_t>(id)]; }

CloneId parse_clone_id(std::string_view text) {
  for (std::size_t i = 0; i < kAsciiIds.size(); ++i)
    if (kAsciiIds[i] == text) return kAllClones[i];
  throw InvalidInput("unknown clone id '" + std::string(text) +
                     "' (expected one of BOT, MEET, JOIN, U, MPT0, MPT1, AP, AP0, A, DM, TOP)");
}

GeneratorSet named_clone(CloneId id) {
  switch (id) {
    case CloneId::Bottom: return {};
    case CloneId::Meet: return {ops::meet(), ops::zero(), ops::one()};
    case CloneId::Join: return {ops::join(), ops::zero(), ops::one()};
    case CloneId::U: return {ops::negation(), ops::zero()};
    case CloneId::MPT0: return {ops::join_of_meet()};
    case CloneId::MPT1: return {ops::meet_of_join()};
    case CloneId::AP: return {ops::sum3()};
    case CloneId::AP0: return {ops::sum2()};
    case CloneId::A: return {ops::biconditional(), ops::zero()};
    case CloneId::DM: return {ops::majority()};
    case CloneId::Top: return {ops::join(), ops::negation()};
  }
  throw ContractViolation("named_clone: bad id");
}

std::vector<TruthTable> term_closure(const GeneratorSet& gens, int arity) {
  require(arity >= 0 && arity <= TruthTable::kMaxArity, "term_closure: arity must be in [0, 4]");
  require(gens.max_arity() <= TruthTable::kMaxArity, "term_closure: generator arity above 4");
  std::vector<std::uint16_t> raw;
  close_over(gens, arity, std::nullopt, &raw);
  std::vector<TruthTable> out;
  out.reserve(raw.size());
  for (auto t : raw) out.emplace_back(arity, t);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_clone(const TruthTable& op, const GeneratorSet& gens) {
  // A constant belongs to a clone when the constant unary operation does.
  if (op.arity() == 0) return close_over(gens, 1, op.bits() ? 0b11 : 0b00, nullptr);
  return close_over(gens, op.arity(), op.bits(), nullptr);
}

bool clone_leq(const GeneratorSet& f, const GeneratorSet& g) {
  return std::all_of(f.ops().begin(), f.ops().end(), [&](const TruthTable& op) { return in_clone(op, g); });
}

bool verify_jonsson(std::span<const Term> terms) {
  if (terms.empty() || terms.size() % 2 == 0) return false;
  std::vector<TruthTable> j;
  for (const auto& t : terms) {
    if (t.variables_used() > 3) return false;
    j.push_back(t.tabulate(3));
  }
  const std::size_t last = j.size();  // 2m + 1
  const std::size_t m = (last - 1) / 2;
  // J(a,b,c) with a,b,c bits.
  auto J = [&](std::size_t i, unsigned a, unsigned b, unsigned c) { return j[i - 1].at((a << 2) | (b << 1) | c); };

  for (unsigned x = 0; x < 2; ++x) {
    for (unsigned y = 0; y < 2; ++y) {
      if (J(1, x, x, y) != (x != 0)) return false;
      if (J(last, x, y, y) != (y != 0)) return false;
      for (std::size_t i = 1; i <= last; ++i)
        if (J(i, x, y, x) != (x != 0)) return false;
      for (std::size_t i = 1; i + 1 <= m; ++i)
        if (J(2 * i + 1, x, y, y) != J(2 * i + 2, x, y, y)) return false;
      for (std::size_t i = 1; i <= m; ++i)
        if (J(2 * i, x, x, y) != J(2 * i + 1, x, x, y)) return false;
    }
  }
  return true;
}

std::vector<Term> jonsson_terms(CloneId witness) {
  auto x = Term::variable(0), y = Term::variable(1), z = Term::variable(2);
  switch (witness) {
    case CloneId::DM: return {Term::apply(ops::majority(), {x, y, z})};
    case CloneId::MPT1: {
      // g(x,y,z) = x ∧ (y ∨ z): J1 = g(x,y,z), J2 = x ∧ z = g(x,z,z), J3 = z ∧ (x ∨ y) = g(z,x,y).
      auto g = ops::meet_of_join();
      return {Term::apply(g, {x, y, z}), Term::apply(g, {x, z, z}), Term::apply(g, {z, x, y})};
    }
    case CloneId::MPT0: {
      // Order dual of the MPT1 sequence.
      auto g = ops::join_of_meet();
      return {Term::apply(g, {x, y, z}), Term::apply(g, {x, z, z}), Term::apply(g, {z, x, y})};
    }
    default: throw ContractViolation("jonsson_terms: only DM, MPT0 and MPT1 carry a witness sequence");
  }
}

std::string_view case_name(Case c) {
  switch (c) {
    case Case::BothPoly: return "BothPoly";
    case Case::QuantumOnlySpeedup: return "QuantumOnlySpeedup";
    case Case::Intractable: return "Intractable";
  }
  return "?";
}

Classification classify(const GeneratorSet& gens) {
  require(gens.max_arity() <= TruthTable::kMaxArity, "classify: generator arity above 4");
  auto above = [&](CloneId id) { return clone_leq(named_clone(id), gens); };
  auto below = [&](CloneId id) { return clone_leq(gens, named_clone(id)); };
  auto tag_above = [](CloneId id) { return std::string(ascii_id(id)) + " <= B"; };
  auto tag_below = [](CloneId id) { return "B <= " + std::string(ascii_id(id)); };

  Classification out{Case::BothPoly, {}, CloneId::Bottom};
  for (CloneId id : {CloneId::MPT0, CloneId::MPT1, CloneId::DM}) {
    if (above(id)) {
      if (out.witnesses.empty()) out.primary_witness = id;
      out.witnesses.push_back(tag_above(id));
    }
  }
  if (!out.witnesses.empty()) return out;

  if (above(CloneId::AP) && below(CloneId::A)) {
    return {Case::QuantumOnlySpeedup, {tag_above(CloneId::AP), tag_below(CloneId::A)}, CloneId::AP};
  }

  out.kind = Case::Intractable;
  for (CloneId id : {CloneId::Meet, CloneId::Join, CloneId::U}) {
    if (below(id)) {
      if (out.witnesses.empty()) out.primary_witness = id;
      out.witnesses.push_back(tag_below(id));
    }
  }
  if (!out.witnesses.empty()) return out;
  throw Unclassified("no classification case matched the generator set");
}

}  // namespace hkp
