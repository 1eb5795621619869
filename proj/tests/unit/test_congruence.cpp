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
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hkp/congruence.hpp"
#include "hkp/error.hpp"

using namespace hkp;

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

Congruence from_block_strings(int n, std::vector<std::vector<const char*>> blocks) {
  std::vector<std::vector<BitVec>> b;
  for (const auto& block : blocks) {
    auto& out = b.emplace_back();
    for (const char* s : block) out.push_back(BitVec::parse(s));
  }
  return Congruence::from_blocks(n, b);
}

// Coordinatewise application by direct table lookup, one coordinate at a time.
std::uint64_t lift(const TruthTable& g, const std::uint64_t* args, int n) {
  std::uint64_t out = 0;
  for (int c = 0; c < n; ++c) {
    unsigned idx = 0;
    for (int j = 0; j < g.arity(); ++j) idx = (idx << 1) | ((args[j] >> c) & 1u);
    out |= static_cast<std::uint64_t>((g.bits() >> idx) & 1u) << c;
  }
  return out;
}

// Naive compatibility: every generator applied to every tuple of related
// pairs gives related outputs, computed with lift_pointwise.
bool naive_is_congruence(const std::vector<std::uint64_t>& label, const GeneratorSet& gens, int n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Pair> related;
  for (std::uint64_t a = 0; a < size; ++a)
    for (std::uint64_t b = 0; b < size; ++b)
      if (label[a] == label[b]) related.push_back({a, b});
  for (const auto& g : gens.ops()) {
    const int k = g.arity();
    std::vector<std::size_t> pick(k, 0);
    std::uint64_t left[4], right[4];
    while (true) {
      for (int j = 0; j < k; ++j) {
        left[j] = related[pick[j]].first;
        right[j] = related[pick[j]].second;
      }
      if (label[lift(g, left, n)] != label[lift(g, right, n)]) return false;
      int j = k - 1;
      while (j >= 0 && ++pick[j] == related.size()) pick[j--] = 0;
      if (j < 0) break;
    }
  }
  return true;
}

// Naive Cg: grow a relation by applying generators to related tuples and
// by transitivity until it stops changing.
Congruence naive_cg(const std::vector<Pair>& pairs, const GeneratorSet& gens, int n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::vector<bool>> rel(size, std::vector<bool>(size, false));
  for (std::uint64_t a = 0; a < size; ++a) rel[a][a] = true;
  for (auto [a, b] : pairs) rel[a][b] = rel[b][a] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Pair> cur;
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b)
        if (rel[a][b]) cur.push_back({a, b});
    auto add = [&](std::uint64_t a, std::uint64_t b) {
      if (!rel[a][b]) {
        rel[a][b] = rel[b][a] = true;
        grew = true;
      }
    };
    for (const auto& g : gens.ops()) {
      const int k = g.arity();
      std::vector<std::size_t> pick(k, 0);
      std::uint64_t left[4], right[4];
      while (true) {
        for (int j = 0; j < k; ++j) {
          left[j] = cur[pick[j]].first;
          right[j] = cur[pick[j]].second;
        }
        add(lift(g, left, n), lift(g, right, n));
        int j = k - 1;
        while (j >= 0 && ++pick[j] == cur.size()) pick[j--] = 0;
        if (j < 0) break;
      }
    }
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b)
        if (rel[a][b])
          for (std::uint64_t c = 0; c < size; ++c)
            if (rel[b][c]) add(a, c);
  }
  std::vector<std::uint64_t> label(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    label[a] = a;
    for (std::uint64_t b = 0; b < a; ++b)
      if (rel[a][b]) {
        label[a] = b;
        break;
      }
  }
  return Congruence::from_labels(n, label);
}

// Every partition of {0,1}^n as a restricted-growth labelling.
void for_each_partition(int n, const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint64_t> label(size, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t blocks) {
    if (i == size) {
      f(label);
      return;
    }
    for (std::uint64_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  label[0] = 0;
  rec(1, 1);
}

std::size_t oracle_congruence_count(const GeneratorSet& gens, int n) {
  std::size_t count = 0;
  for_each_partition(n, [&](const auto& label) { count += naive_is_congruence(label, gens, n) ? 1 : 0; });
  return count;
}

}  // namespace

TEST_CASE("the test oracle's lift matches lift_pointwise") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int k = static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 6);
    const TruthTable g(k, static_cast<std::uint16_t>(rng() & ((1u << (1u << k)) - 1)));
    std::uint64_t raw[4];
    std::vector<BitVec> args;
    for (int j = 0; j < k; ++j) args.emplace_back(n, raw[j] = rng() & BitVec::mask_for(n));
    CHECK(lift(g, raw, n) == lift_pointwise(g, args, n).value());
  }
}

TEST_CASE("canonical form and basic structure") {
  const auto theta = from_block_strings(2, {{"11", "00"}, {"10", "01"}});
  CHECK(theta.num_blocks() == 2);
  CHECK(theta.rep(3) == 0);
  CHECK(theta.rep(2) == 1);
  CHECK(theta.zero_block() == std::vector<std::uint64_t>{0, 3});
  CHECK(theta.blocks() == std::vector<std::vector<std::uint64_t>>{{0, 3}, {1, 2}});
  CHECK(Congruence::identity(2).is_identity());
  CHECK(Congruence::total(2).is_total());
  CHECK(Congruence::identity(2).refines(theta));
  CHECK(theta.refines(Congruence::total(2)));
  CHECK_FALSE(theta.refines(Congruence::identity(2)));
  CHECK_THROWS_AS(from_block_strings(2, {{"00", "01"}, {"01", "10", "11"}}), InvalidInput);
  CHECK_THROWS_AS(from_block_strings(2, {{"00", "01"}, {"10"}}), InvalidInput);
}

TEST_CASE("is_congruence examples") {
  CHECK(is_congruence(from_block_strings(2, {{"00", "11"}, {"01", "10"}}), named_clone(CloneId::AP)));
  CHECK(is_congruence(from_block_strings(2, {{"00", "01", "10"}, {"11"}}), named_clone(CloneId::Meet)));
  CHECK_FALSE(is_congruence(from_block_strings(2, {{"00", "01"}, {"10"}, {"11"}}), named_clone(CloneId::U)));
}

TEST_CASE("is_congruence agrees with the naive check on every partition, n <= 2, and samples at n = 3") {
  for (CloneId id : all_named_clones()) {
    const auto gens = named_clone(id);
    for (int n = 1; n <= 2; ++n) {
      for_each_partition(n, [&](const auto& label) {
        CHECK(is_congruence(Congruence::from_labels(n, label), gens) == naive_is_congruence(label, gens, n));
      });
    }
    std::mt19937_64 rng(static_cast<std::uint64_t>(id) + 1);
    for (int t = 0; t < 40; ++t) {
      std::vector<std::uint64_t> label(8);
      const std::uint64_t blocks = 1 + rng() % 6;
      for (auto& l : label) l = rng() % blocks;
      CHECK(is_congruence(Congruence::from_labels(3, label), gens) == naive_is_congruence(label, gens, 3));
    }
  }
}

TEST_CASE("cg examples") {
  const Pair p01_10{1, 2};
  CHECK(cg(std::span(&p01_10, 1), named_clone(CloneId::Meet), 2) == from_block_strings(2, {{"00", "01", "10"}, {"11"}}));
  const Pair p00_11{0, 3};
  CHECK(cg(std::span(&p00_11, 1), named_clone(CloneId::A), 2) == from_block_strings(2, {{"00", "11"}, {"01", "10"}}));
  for (CloneId id : all_named_clones()) CHECK(cg(PairSet{}, named_clone(id), 3).is_identity());
}

TEST_CASE("cg agrees with the naive closure oracle") {
  std::mt19937_64 rng(2024);
  const auto ids = all_named_clones();
  for (int t = 0; t < 200; ++t) {
    const CloneId id = ids[rng() % ids.size()];
    const int n = 1 + static_cast<int>(rng() % 3);
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<Pair> pairs(rng() % 3);
    for (auto& p : pairs) p = {rng() % size, rng() % size};
    CAPTURE(ascii_id(id));
    CAPTURE(n);
    CHECK(cg(pairs, named_clone(id), n) == naive_cg(pairs, named_clone(id), n));
  }
  // A user generator of arity 4.
  const GeneratorSet g4{TruthTable::from_function(4, [](auto a) { return (a[0] && a[1]) || (a[2] && !a[3]); })};
  for (std::uint64_t b = 1; b < 8; ++b) {
    const std::vector<Pair> pairs{{0, b}};
    CHECK(cg(pairs, g4, 3) == naive_cg(pairs, g4, 3));
  }
}

TEST_CASE("enumerate_congruences examples") {
  CHECK(enumerate_congruences(named_clone(CloneId::DM), 2).size() == 4);
  CHECK(enumerate_congruences(named_clone(CloneId::AP0), 2).size() == 5);
  CHECK(enumerate_congruences(named_clone(CloneId::AP), 1).size() == 2);
  CHECK_THROWS_AS(enumerate_congruences(named_clone(CloneId::DM), 5), CapacityExceeded);
  CHECK_THROWS_AS(enumerate_congruences(GeneratorSet{}, 4, 1000), CapacityExceeded);
}

TEST_CASE("enumerate_congruences counts agree with the partition-enumeration oracle") {
  for (CloneId id : all_named_clones()) {
    const auto gens = named_clone(id);
    for (int n = 1; n <= 2; ++n) {
      CAPTURE(ascii_id(id));
      CAPTURE(n);
      CHECK(enumerate_congruences(gens, n).size() == oracle_congruence_count(gens, n));
    }
  }
  // n = 3 has 4140 partitions; check the clones named in the lemmas.
  CHECK(oracle_congruence_count(named_clone(CloneId::DM), 3) == 8);
  CHECK(oracle_congruence_count(named_clone(CloneId::AP), 3) == 16);
  CHECK(enumerate_congruences(named_clone(CloneId::DM), 3).size() == 8);
  CHECK(enumerate_congruences(named_clone(CloneId::AP), 3).size() == 16);
  CHECK(enumerate_congruences(named_clone(CloneId::Meet), 3).size() == oracle_congruence_count(named_clone(CloneId::Meet), 3));
  CHECK(enumerate_congruences(named_clone(CloneId::U), 3).size() == oracle_congruence_count(named_clone(CloneId::U), 3));
}

TEST_CASE("Con is a lattice of congruences and cg is least") {
  for (CloneId id : all_named_clones()) {
    const auto gens = named_clone(id);
    for (int n = 1; n <= 3; ++n) {
      if (id == CloneId::Bottom && n == 3) continue;  // 4140 members; quadratic checks below
      const auto cons = enumerate_congruences(gens, n);
      const std::set<Congruence> all(cons.begin(), cons.end());
      CHECK(std::is_sorted(cons.begin(), cons.end()));
      for (const auto& a : cons) {
        CHECK(is_congruence(a, gens));
        for (const auto& b : cons) {
          CHECK(all.count(meet(a, b)) == 1);
          CHECK(all.count(join(a, b)) == 1);
        }
      }
      const std::uint64_t size = std::uint64_t{1} << n;
      for (std::uint64_t a = 0; a < size; ++a) {
        for (std::uint64_t b = a + 1; b < size; ++b) {
          const Pair p{a, b};
          const auto c = cg(std::span(&p, 1), gens, n);
          const Congruence* least = nullptr;
          for (const auto& t : cons)
            if (t.related(a, b) && (!least || t.refines(*least))) least = &t;
          REQUIRE(least != nullptr);
          CHECK(c == *least);
        }
      }
    }
  }
}

TEST_CASE("maj and MPT powers have exactly the projection kernels") {
  for (CloneId id : {CloneId::DM, CloneId::MPT0, CloneId::MPT1}) {
    for (int n = 1; n <= 3; ++n) {
      const auto cons = enumerate_congruences(named_clone(id), n);
      CHECK(cons.size() == (std::size_t{1} << n));
      std::set<Congruence> kernels;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> coords;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1u) coords.push_back(i + 1);
        kernels.insert(projection_kernel(n, coords));
      }
      CHECK(std::set<Congruence>(cons.begin(), cons.end()) == kernels);
    }
  }
}

TEST_CASE("congruences of the x+y+z algebra are subspace cosets") {
  const std::vector<std::size_t> counts{2, 5, 16};
  for (int n = 1; n <= 3; ++n) {
    const auto cons = enumerate_congruences(named_clone(CloneId::AP), n);
    CHECK(cons.size() == counts[n - 1]);
    for (const auto& theta : cons) {
      const auto h = theta.zero_block();
      // The 0-block is closed under XOR and every block is a translate of it.
      for (auto a : h)
        for (auto b : h) CHECK(theta.related(0, a ^ b));
      for (std::uint64_t x = 0; x < theta.element_count(); ++x)
        for (auto a : h) CHECK(theta.related(x, x ^ a));
    }
  }
}

TEST_CASE("projection_kernel") {
  const std::vector<int> i13{1, 3};
  const auto k = projection_kernel(3, i13);
  CHECK(k.num_blocks() == 4);
  CHECK(k.related(BitVec::parse("000"), BitVec::parse("010")));
  CHECK_FALSE(k.related(BitVec::parse("000"), BitVec::parse("100")));
  CHECK(projection_kernel(3, std::vector<int>{}).is_total());
  CHECK(projection_kernel(3, std::vector<int>{1, 2, 3}).is_identity());
}

TEST_CASE("min_generating_pairs examples") {
  const auto meet = named_clone(CloneId::Meet);
  CHECK(min_generating_pairs(Congruence::identity(2), meet, 3) == 0);
  const Pair p{1, 2};
  CHECK(min_generating_pairs(cg(std::span(&p, 1), meet, 2), meet, 3) == 1);
  // θ_Z for Z = {0011, 0101} in MEET^4: Z² reduces to the single pair.
  const std::vector<Pair> z2{{0b0011, 0b0101}};
  CHECK(min_generating_pairs(cg(z2, meet, 4), meet, 3) == 1);
  // Needs two pairs: two disjoint principal merges.
  const std::vector<Pair> two{{0b0011, 0b0101}, {0b1010, 0b1100}};
  CHECK(min_generating_pairs(cg(two, meet, 4), meet, 3) == 2);
  CHECK(min_generating_pairs(cg(two, meet, 4), meet, 1) == std::nullopt);
}
