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
#include <cmath>
#include <set>
#include <vector>

#include "hkp/error.hpp"
#include "hkp/hardness.hpp"

using namespace hkp;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("middle_layer") {
  const auto two = middle_layer(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].str() == "01");
  CHECK(two[1].str() == "10");
  for (int n = 2; n <= 16; ++n) {
    const auto layer = middle_layer(n);
    CHECK(layer.size() == binomial(n, n / 2));
    if (n > 10) continue;
    for (const auto& a : layer)
      for (const auto& b : layer)
        if (a != b) CHECK((a.value() & ~b.value()) != 0);
  }
  CHECK_THROWS_AS(middle_layer(1), ContractViolation);
  CHECK_THROWS_AS(middle_layer(17), ContractViolation);
}

TEST_CASE("theta_Z examples") {
  CHECK(theta_Z({}, 4).is_identity());
  const auto layer = middle_layer(2);
  const auto t = theta_Z(layer, 2);
  CHECK(t == Congruence::from_blocks(
                 2, {{BitVec::parse("00"), BitVec::parse("01"), BitVec::parse("10")}, {BitVec::parse("11")}}));
  CHECK(is_congruence(t, named_clone(CloneId::Meet)));
  const std::vector<BitVec> outside{BitVec::parse("11")};
  CHECK_THROWS(theta_Z(outside, 2));
}

TEST_CASE("theta_Z over all subsets at n = 4") {
  const auto layer = middle_layer(4);
  const auto gens = named_clone(CloneId::Meet);
  std::set<Congruence> distinct;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<BitVec> z;
    for (int i = 0; i < 6; ++i)
      if ((mask >> i) & 1u) z.push_back(layer[i]);
    const auto theta = theta_Z(z, 4);
    CHECK(is_congruence(theta, gens));
    distinct.insert(theta);
    // Nothing above a member of Z is glued to it.
    for (const auto& member : z)
      for (std::uint64_t g = 0; g < 16; ++g)
        if (g != member.value() && (g & member.value()) == member.value())
          CHECK_FALSE(theta.related(member.value(), g));
    if (z.size() >= 2) {
      for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j) CHECK(theta.related(z[i], z[j]));
    }
  }
  // A single element or none generates the identity, so the empty set and the
  // six singletons coincide.
  CHECK(distinct.size() == 58);
}

TEST_CASE("theta_z_xor") {
  const auto t = theta_z_xor(BitVec::parse("11"));
  CHECK(t == Congruence::from_blocks(
                 2, {{BitVec::parse("00"), BitVec::parse("11")}, {BitVec::parse("01"), BitVec::parse("10")}}));
  CHECK(theta_z_xor(BitVec::parse("1")).is_total());
  CHECK_THROWS_AS(theta_z_xor(BitVec::parse("000")), InvalidInput);
  const auto gens = named_clone(CloneId::A);
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t z = 1; z < (1u << n); ++z) {
      const std::vector<std::pair<std::uint64_t, std::uint64_t>> pair{{0, z}};
      CHECK(theta_z_xor(BitVec(n, z)) == cg(pair, gens, n));
      CHECK(is_congruence(theta_z_xor(BitVec(n, z)), gens));
    }
}

TEST_CASE("negation_pairs and theta_Y_neg") {
  const auto c2 = negation_pairs(2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].first.str() == "00");
  CHECK(c2[0].second.str() == "01");
  const std::vector<int> all2{0};
  CHECK(theta_Y_neg(all2, 2) == Congruence::from_blocks(2, {{BitVec::parse("00"), BitVec::parse("01")},
                                                            {BitVec::parse("10"), BitVec::parse("11")}}));
  CHECK(theta_Y_neg({}, 3).is_identity());
  CHECK_THROWS(negation_pairs(1));

  const auto gens = named_clone(CloneId::U);
  const auto c4 = negation_pairs(4);
  REQUIRE(c4.size() == 4);
  std::set<Congruence> distinct;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<int> y;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (int i = 0; i < 4; ++i)
      if ((mask >> i) & 1u) {
        y.push_back(i);
        pairs.emplace_back(c4[i].first.value(), c4[i].second.value());
      }
    const auto theta = theta_Y_neg(y, 4);
    CHECK(is_congruence(theta, gens));
    CHECK(theta == cg(pairs, gens, 4));
    distinct.insert(theta);
  }
  CHECK(distinct.size() == 16);
}

TEST_CASE("sidon_probes") {
  const auto probes = sidon_probes(8, 16);
  CHECK(probes.size() == 16);
  CHECK(std::set<std::uint64_t>(probes.begin(), probes.end()).size() == 16);
  std::set<std::uint64_t> diffs;
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = i + 1; j < probes.size(); ++j) CHECK(diffs.insert(probes[i] ^ probes[j]).second);
  CHECK(sidon_probes(3, 8).size() == 8);
  CHECK_THROWS(sidon_probes(3, 9));
}

TEST_CASE("collision_experiment edge cases") {
  for (auto s : {ProbeStrategy::DistinctRandom, ProbeStrategy::AdversarialSequential}) {
    CHECK(collision_experiment(6, 1, 200, 1, s).empirical_success == 0.0);
    CHECK(collision_experiment(6, 64, 200, 1, s).empirical_success == 1.0);
  }
  const auto st = collision_experiment(8, 16, 10, 2, ProbeStrategy::DistinctRandom);
  CHECK(st.predicted == doctest::Approx(16.0 * 15.0 / (2.0 * 255.0)));
  CHECK(st.trials == 10);
  CHECK(parse_probe_strategy("adversarial-sequential") == ProbeStrategy::AdversarialSequential);
  CHECK(probe_strategy_name(ProbeStrategy::DistinctRandom) == "distinct-random");
  CHECK_THROWS_AS(parse_probe_strategy("greedy"), InvalidInput);
  CHECK_THROWS(collision_experiment(4, 17, 1, 0, ProbeStrategy::DistinctRandom));
}

TEST_CASE("collision_experiment does not depend on the thread count") {
  const auto one = collision_experiment(8, 16, 400, 77, ProbeStrategy::DistinctRandom, 1);
  const auto four = collision_experiment(8, 16, 400, 77, ProbeStrategy::DistinctRandom, 4);
  CHECK(one.successes == four.successes);
}

TEST_CASE("adversarial probes track the predicted rate") {
  const auto st = collision_experiment(8, 16, 2000, 5, ProbeStrategy::AdversarialSequential, 4);
  CHECK(std::abs(st.empirical_success - st.predicted) <= 3 * st.sigma);
}
