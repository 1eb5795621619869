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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hkp/clone.hpp"
#include "hkp/error.hpp"

using namespace hkp;

namespace {

// Independent closure oracle: tables as plain bit vectors, composition by
// evaluating the generator row by row, iterated until nothing new appears.
std::set<std::vector<std::uint8_t>> naive_closure(const GeneratorSet& gens, int k) {
  const int rows = 1 << k;
  std::set<std::vector<std::uint8_t>> s;
  for (int i = 0; i < k; ++i) {
    std::vector<std::uint8_t> t(rows);
    for (int r = 0; r < rows; ++r) t[r] = (r >> (k - 1 - i)) & 1;
    s.insert(t);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<std::uint8_t>> cur(s.begin(), s.end());
    for (const auto& g : gens.ops()) {
      const int a = g.arity();
      if (a > 0 && cur.empty()) continue;
      std::vector<std::size_t> pick(a, 0);
      while (true) {
        std::vector<std::uint8_t> t(rows);
        for (int r = 0; r < rows; ++r) {
          unsigned idx = 0;
          for (int j = 0; j < a; ++j) idx = (idx << 1) | cur[pick[j]][r];
          t[r] = (g.bits() >> idx) & 1u;
        }
        if (s.insert(t).second) grew = true;
        int j = a - 1;
        while (j >= 0 && ++pick[j] == cur.size()) pick[j--] = 0;
        if (j < 0) break;
      }
    }
  }
  return s;
}

std::set<std::vector<std::uint8_t>> as_rows(const std::vector<TruthTable>& tables) {
  std::set<std::vector<std::uint8_t>> out;
  for (const auto& t : tables) {
    std::vector<std::uint8_t> v(t.rows());
    for (int r = 0; r < t.rows(); ++r) v[r] = (t.bits() >> r) & 1u;
    out.insert(v);
  }
  return out;
}

GeneratorSet gs(std::initializer_list<TruthTable> ops) { return GeneratorSet(std::vector<TruthTable>(ops)); }

}  // namespace

TEST_CASE("term_closure examples") {
  CHECK(term_closure(gs({ops::meet(), ops::zero(), ops::one()}), 2).size() == 5);
  const auto ap2 = term_closure(gs({ops::sum3()}), 2);
  CHECK(ap2.size() == 2);
  CHECK(std::find(ap2.begin(), ap2.end(), ops::sum2()) == ap2.end());
  const auto bot1 = term_closure(GeneratorSet{}, 1);
  REQUIRE(bot1.size() == 1);
  CHECK(bot1[0] == TruthTable::projection(1, 1));
  CHECK(term_closure(named_clone(CloneId::Top), 2).size() == 16);
}

TEST_CASE("term_closure agrees with a naive composition oracle") {
  for (CloneId id : all_named_clones())
    for (int k = 0; k <= 3; ++k) CHECK(as_rows(term_closure(named_clone(id), k)) == naive_closure(named_clone(id), k));
  // A few user generators of arity 4.
  const TruthTable t4 = TruthTable::from_function(4, [](auto a) { return (a[0] && a[1]) != (a[2] || a[3]); });
  for (int k = 0; k <= 2; ++k) CHECK(as_rows(term_closure(gs({t4}), k)) == naive_closure(gs({t4}), k));
}

TEST_CASE("term_closure is idempotent and monotone") {
  for (CloneId id : all_named_clones()) {
    for (int k = 1; k <= 3; ++k) {
      const auto c = term_closure(named_clone(id), k);
      // Closing again adds nothing: every generator applied to members stays inside.
      const auto words = as_rows(c);
      const std::vector<std::vector<std::uint8_t>> members(words.begin(), words.end());
      const auto gens = named_clone(id);
      for (const auto& g : gens.ops()) {
        std::vector<std::size_t> pick(g.arity(), 0);
        while (true) {
          std::vector<std::uint8_t> t(1u << k);
          for (unsigned r = 0; r < t.size(); ++r) {
            unsigned idx = 0;
            for (int j = 0; j < g.arity(); ++j) idx = (idx << 1) | members[pick[j]][r];
            t[r] = (g.bits() >> idx) & 1u;
          }
          CHECK(words.count(t) == 1);
          int j = g.arity() - 1;
          while (j >= 0 && ++pick[j] == members.size()) pick[j--] = 0;
          if (j < 0) break;
        }
      }
      const auto bigger = term_closure(named_clone(CloneId::Top), k);
      for (const auto& t : c) CHECK(std::binary_search(bigger.begin(), bigger.end(), t));
    }
  }
}

TEST_CASE("clone_leq examples") {
  CHECK(clone_leq(gs({ops::sum3()}), gs({ops::sum2()})));
  CHECK_FALSE(clone_leq(gs({ops::sum2()}), gs({ops::sum3()})));
  for (CloneId id : all_named_clones()) CHECK(clone_leq(GeneratorSet{}, named_clone(id)));
}

TEST_CASE("clone_leq on the catalog: reflexive, transitive, covering edges") {
  const auto ids = all_named_clones();
  for (CloneId a : ids) CHECK(clone_leq(named_clone(a), named_clone(a)));
  for (CloneId a : ids)
    for (CloneId b : ids)
      for (CloneId c : ids)
        if (clone_leq(named_clone(a), named_clone(b)) && clone_leq(named_clone(b), named_clone(c)))
          CHECK(clone_leq(named_clone(a), named_clone(c)));
  using C = CloneId;
  const std::vector<std::pair<C, C>> strict{{C::Bottom, C::Meet}, {C::Bottom, C::Join}, {C::Bottom, C::U},
                                            {C::Bottom, C::AP},   {C::Bottom, C::DM},   {C::AP, C::AP0},
                                            {C::AP0, C::A},       {C::U, C::A},         {C::DM, C::Top},
                                            {C::MPT0, C::Top},    {C::MPT1, C::Top},    {C::A, C::Top},
                                            {C::Meet, C::Top},    {C::Join, C::Top}};
  for (auto [lo, hi] : strict) {
    CAPTURE(ascii_id(lo));
    CAPTURE(ascii_id(hi));
    CHECK(clone_leq(named_clone(lo), named_clone(hi)));
    CHECK_FALSE(clone_leq(named_clone(hi), named_clone(lo)));
  }
  // Incomparable pairs.
  CHECK_FALSE(clone_leq(named_clone(C::Meet), named_clone(C::Join)));
  CHECK_FALSE(clone_leq(named_clone(C::DM), named_clone(C::A)));
  CHECK_FALSE(clone_leq(named_clone(C::MPT0), named_clone(C::MPT1)));
}

TEST_CASE("named clones match the generator table") {
  CHECK(named_clone(CloneId::AP) == gs({ops::sum3()}));
  CHECK(named_clone(CloneId::Top) == gs({ops::join(), ops::negation()}));
  CHECK(named_clone(CloneId::Meet) == gs({ops::meet(), ops::zero(), ops::one()}));
  CHECK(named_clone(CloneId::DM) == gs({ops::majority()}));
  CHECK(named_clone(CloneId::A) == gs({ops::biconditional(), ops::zero()}));
  CHECK(named_clone(CloneId::U) == gs({ops::negation(), ops::zero()}));
  CHECK(named_clone(CloneId::AP0) == gs({ops::sum2()}));
  CHECK(named_clone(CloneId::Bottom).empty());
  for (CloneId id : all_named_clones()) CHECK(parse_clone_id(ascii_id(id)) == id);
  CHECK_THROWS_AS(parse_clone_id("FOO"), InvalidInput);
}

TEST_CASE("verify_jonsson") {
  const auto x = Term::variable(0), y = Term::variable(1), z = Term::variable(2);
  const std::vector<Term> mpt{Term::apply(ops::meet(), {x, Term::apply(ops::join(), {y, z})}),
                              Term::apply(ops::meet(), {x, z}),
                              Term::apply(ops::meet(), {z, Term::apply(ops::join(), {x, y})})};
  CHECK(verify_jonsson(mpt));
  const std::vector<Term> maj{Term::apply(ops::majority(), {x, y, z})};
  CHECK(verify_jonsson(maj));
  const std::vector<Term> proj{x};
  CHECK_FALSE(verify_jonsson(proj));
  CHECK_FALSE(verify_jonsson({}));
  CHECK_FALSE(verify_jonsson(std::vector<Term>{mpt[0], mpt[1]}));
  for (CloneId id : {CloneId::DM, CloneId::MPT0, CloneId::MPT1}) {
    const auto terms = jonsson_terms(id);
    CHECK(verify_jonsson(terms));
    // The terms are built from the clone's own operations.
    for (const auto& t : terms) CHECK(in_clone(t.tabulate(3), named_clone(id)));
  }
}

TEST_CASE("classify reproduces the three-way partition") {
  using C = CloneId;
  const std::vector<std::pair<C, Case>> expected{
      {C::DM, Case::BothPoly},           {C::MPT0, Case::BothPoly},   {C::MPT1, Case::BothPoly},
      {C::Top, Case::BothPoly},          {C::AP, Case::QuantumOnlySpeedup}, {C::AP0, Case::QuantumOnlySpeedup},
      {C::A, Case::QuantumOnlySpeedup},  {C::Bottom, Case::Intractable}, {C::U, Case::Intractable},
      {C::Meet, Case::Intractable},      {C::Join, Case::Intractable}};
  for (auto [id, want] : expected) {
    CAPTURE(ascii_id(id));
    const auto c = classify(named_clone(id));
    CHECK(c.kind == want);
    CHECK_FALSE(c.witnesses.empty());
  }
  CHECK(classify(gs({ops::majority()})).witnesses.front() == "DM <= B");
  CHECK(classify(gs({ops::sum2()})).kind == Case::QuantumOnlySpeedup);
  CHECK(classify(gs({ops::negation(), ops::zero()})).kind == Case::Intractable);
}

TEST_CASE("classify covers every single operation of arity <= 3") {
  // Completeness check: Unclassified would mean a clone outside the three cases.
  for (int k = 0; k <= 3; ++k) {
    for (unsigned t = 0; t < (1u << (1u << k)); ++t) {
      CAPTURE(k);
      CAPTURE(t);
      CHECK_NOTHROW(classify(gs({TruthTable(k, static_cast<std::uint16_t>(t))})));
    }
  }
}

TEST_CASE("BothPoly witnesses come with valid Jonsson terms") {
  for (CloneId id : all_named_clones()) {
    const auto c = classify(named_clone(id));
    if (c.kind != Case::BothPoly) continue;
    CHECK(verify_jonsson(jonsson_terms(c.primary_witness)));
  }
}
