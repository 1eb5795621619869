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

#include <cmath>
#include <random>

#include "hkp/error.hpp"
#include "hkp/gf2.hpp"
#include "hkp/random.hpp"
#include "hkp/solvers.hpp"

using namespace hkp;

namespace {

Congruence span_cosets(int n, std::initializer_list<const char*> gens) {
  Gf2Matrix m(n);
  for (const char* g : gens) m.add_row(BitVec::parse(g));
  return coset_congruence(row_reduce(m));
}

}  // namespace

TEST_CASE("simon_sample_count") {
  CHECK(simon_sample_count(4, 1) == 4);
  CHECK(simon_sample_count(4, 2) == 5);
  CHECK(simon_sample_count(4, 16) == 8);
  CHECK(simon_sample_count(4, 17) == 9);
  CHECK(simon_sample_count(6, 64) == 12);
  CHECK_THROWS_AS(simon_sample_count(4, 0.5), ContractViolation);
}

TEST_CASE("coset_congruence") {
  const auto theta = span_cosets(3, {"110"});
  CHECK(theta.num_blocks() == 4);
  CHECK(theta.related(BitVec::parse("001"), BitVec::parse("111")));
  CHECK_FALSE(theta.related(BitVec::parse("001"), BitVec::parse("011")));
  CHECK(coset_congruence(Gf2Subspace::zero(3)).is_identity());
  CHECK(is_congruence(theta, named_clone(CloneId::AP0)));
}

TEST_CASE("solve_simon examples") {
  const auto gens = named_clone(CloneId::AP0);
  HiddenOracle total(Congruence::total(3), gens);
  const auto r = solve_simon(total, 2, 5);
  REQUIRE(r.result);
  CHECK(r.result->is_total());
  CHECK(r.method == Method::Simon);
  CHECK(r.samples == 4);
  CHECK(r.queries == 4);
  CHECK(r.sampled_rank == 0);
  CHECK(r.success_target == doctest::Approx(0.5));

  const auto theta = span_cosets(3, {"110"});
  int hits = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    HiddenOracle o(theta, gens);
    hits += solve_simon(o, 64, s).result == theta ? 1 : 0;
  }
  CHECK(hits >= 45);
}

TEST_CASE("solve_simon success rate on the identity kernel") {
  const auto gens = named_clone(CloneId::AP0);
  for (int n : {4, 6}) {
    const int trials = 500;
    const double target = 1.0 - std::ldexp(1.0, -n);
    int ok = 0;
    for (int t = 0; t < trials; ++t) {
      HiddenOracle o(Congruence::identity(n), gens);
      const auto r = solve_simon(o, std::ldexp(1.0, n), derive_seed(99, t));
      ok += r.result && r.result->is_identity() ? 1 : 0;
      CHECK(is_congruence(*r.result, gens));
    }
    const double sigma = std::sqrt(target * (1 - target) / trials);
    CAPTURE(n);
    CHECK(static_cast<double>(ok) / trials >= target - 3 * sigma);
  }
}

TEST_CASE("solve_simon is deterministic in the seed") {
  const auto gens = named_clone(CloneId::AP);
  HiddenOracle a(Congruence::identity(5), gens), b(Congruence::identity(5), gens);
  CHECK(solve_simon(a, 2, 11).result == solve_simon(b, 2, 11).result);
}

TEST_CASE("solve_cd examples") {
  const auto gens = named_clone(CloneId::DM);
  const std::vector<int> i13{1, 3};
  HiddenOracle o(projection_kernel(3, i13), gens);
  const auto r = solve_cd(o);
  CHECK(r.coordinates == i13);
  CHECK(r.queries == 4);
  CHECK(r.method == Method::Cd);
  CHECK(r.result == projection_kernel(3, i13));

  HiddenOracle total(Congruence::total(3), gens);
  const auto rt = solve_cd(total);
  CHECK(rt.coordinates.empty());
  CHECK(rt.result->is_total());

  HiddenOracle id(Congruence::identity(3), gens);
  CHECK(solve_cd(id).coordinates == std::vector<int>{1, 2, 3});
}

TEST_CASE("solve_cd is exact on every projection kernel, n <= 8") {
  const auto gens = named_clone(CloneId::MPT1);
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 16; ++t) {
      std::vector<int> coords;
      for (int i = 1; i <= n; ++i)
        if (rng() & 1u) coords.push_back(i);
      HiddenOracle o(projection_kernel(n, coords), gens);
      const auto r = solve_cd(o);
      CHECK(r.coordinates == coords);
      CHECK(r.result == projection_kernel(n, coords));
      CHECK(r.queries == static_cast<std::uint64_t>(n + 1));
    }
  }
}

TEST_CASE("solve_exhaustive") {
  const auto gens = named_clone(CloneId::U);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& theta : {Congruence::identity(n), Congruence::total(n)}) {
      HiddenOracle o(theta, gens);
      const auto r = solve_exhaustive(o);
      CHECK(r.result == theta);
      CHECK(r.queries == (std::uint64_t{1} << n));
      CHECK(r.method == Method::Exhaustive);
    }
  }
}

TEST_CASE("solve_hkp dispatch") {
  {
    const auto gens = named_clone(CloneId::DM);
    const std::vector<int> i2{2};
    HiddenOracle o(projection_kernel(3, i2), gens);
    const auto r = solve_hkp(gens, o, {});
    CHECK(r.method == Method::Cd);
    CHECK(r.queries == 4);
    CHECK(r.classification == Case::BothPoly);
  }
  {
    const auto gens = named_clone(CloneId::AP0);
    HiddenOracle o(span_cosets(3, {"110"}), gens);
    const auto r = solve_hkp(gens, o, {.tau = 8, .seed = 1});
    CHECK(r.method == Method::Simon);
    CHECK(r.classification == Case::QuantumOnlySpeedup);
    CHECK(r.samples == 6);
  }
  {
    const auto gens = named_clone(CloneId::U);
    HiddenOracle o(Congruence::identity(4), gens);
    const auto r = solve_hkp(gens, o, {});
    CHECK(r.classification == Case::Intractable);
    CHECK_FALSE(r.result);
    CHECK(r.method == Method::None);
    CHECK(o.query_count() == 0);

    const auto f = solve_hkp(gens, o, {.exhaustive_fallback = true});
    CHECK(f.method == Method::Exhaustive);
    CHECK(f.result == Congruence::identity(4));
  }
  {
    const auto gens = named_clone(CloneId::Meet);
    HiddenOracle o(Congruence::identity(13), gens);
    CHECK_THROWS_AS(solve_hkp(gens, o, {.exhaustive_fallback = true}), CapacityExceeded);
  }
}
