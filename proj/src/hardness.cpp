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

#include "hkp/hardness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "hkp/clone.hpp"
#include "hkp/error.hpp"
#include "hkp/oracle.hpp"
#include "hkp/random.hpp"

namespace hkp {

std::vector<BitVec> middle_layer(int n) {
  require(n >= 2 && n <= 16, "middle_layer: n must be in [2, 16]");
  const int ones = n - n / 2;
  std::vector<BitVec> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    if (std::popcount(x) == ones) out.emplace_back(n, x);
  return out;
}

Congruence theta_Z(std::span<const BitVec> z, int n) {
  require(n >= 2 && n <= 12, "theta_Z: n must be in [2, 12]");
  const int ones = n - n / 2;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const auto& v : z) {
    require(v.width() == n && v.popcount() == ones, "theta_Z: Z must lie in the middle layer");
    pairs.emplace_back(z.front().value(), v.value());
  }
  return cg(pairs, named_clone(CloneId::Meet), n);
}

Congruence theta_z_xor(const BitVec& z) {
  if (z.is_zero()) throw InvalidInput("theta_z_xor: z must be nonzero");
  const int n = z.width();
  require(n <= kMaxElementBits, "theta_z_xor: width too large");
  std::vector<std::uint64_t> label(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < label.size(); ++x) label[x] = std::min(x, x ^ z.value());
  return Congruence::from_labels(n, label);
}

std::string_view probe_strategy_name(ProbeStrategy s) {
  return s == ProbeStrategy::DistinctRandom ? "distinct-random" : "adversarial-sequential";
}

ProbeStrategy parse_probe_strategy(std::string_view text) {
  if (text == "distinct-random") return ProbeStrategy::DistinctRandom;
  if (text == "adversarial-sequential") return ProbeStrategy::AdversarialSequential;
  throw InvalidInput("unknown probe strategy: " + std::string(text));
}

std::vector<std::uint64_t> sidon_probes(int n, std::uint64_t count) {
  const std::uint64_t size = std::uint64_t{1} << n;
  require(count <= size, "sidon_probes: more probes than elements");
  std::vector<std::uint64_t> probes;
  std::vector<bool> used(size, false), diff(size, false);
  for (std::uint64_t x = 0; x < size && probes.size() < count; ++x) {
    bool fresh = true;
    for (auto p : probes)
      if (diff[p ^ x]) { fresh = false; break; }
    if (!fresh) continue;
    for (auto p : probes) diff[p ^ x] = true;
    probes.push_back(x);
    used[x] = true;
  }
  for (std::uint64_t x = 0; x < size && probes.size() < count; ++x)
    if (!used[x]) probes.push_back(x);
  return probes;
}

namespace {

std::vector<std::uint64_t> random_distinct(Rng& rng, std::uint64_t size, std::uint64_t count) {
  // Partial Fisher–Yates over a sparse swap map.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> swaps;
  auto at = [&](std::uint64_t i) {
    for (auto& [k, v] : swaps)
      if (k == i) return v;
    return i;
  };
  auto set = [&](std::uint64_t i, std::uint64_t v) {
    for (auto& [k, w] : swaps)
      if (k == i) { w = v; return; }
    swaps.emplace_back(i, v);
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + rng.below(size - i);
    const std::uint64_t vi = at(i), vj = at(j);
    set(j, vi);
    set(i, vj);
    out.push_back(vj);
  }
  return out;
}

bool run_trial(int n, std::uint64_t probe_count, std::uint64_t seed, const std::vector<std::uint64_t>& fixed,
               const GeneratorSet& gens) {
  const std::uint64_t size = std::uint64_t{1} << n;
  Rng rng(seed);
  const BitVec z(n, 1 + rng.below(size - 1));
  HiddenOracle oracle(theta_z_xor(z), gens);
  const auto probes = fixed.empty() ? random_distinct(rng, size, probe_count) : fixed;
  std::vector<std::uint64_t> answers;
  answers.reserve(probes.size());
  for (auto x : probes) answers.push_back(oracle.query(BitVec(n, x)).value());
  std::sort(answers.begin(), answers.end());
  return std::adjacent_find(answers.begin(), answers.end()) != answers.end();
}

}  // namespace

CollisionStats collision_experiment(int n, std::uint64_t probe_count, std::uint64_t trials, std::uint64_t seed,
                                    ProbeStrategy strategy, int threads) {
  require(n >= 1 && n <= 20, "collision_experiment: n must be in [1, 20]");
  require(probe_count <= (std::uint64_t{1} << n), "collision_experiment: probe_count exceeds 2^n");
  require(trials >= 1, "collision_experiment: trials must be >= 1");
  require(threads >= 1, "collision_experiment: threads must be >= 1");

  const auto gens = named_clone(CloneId::A);
  std::vector<std::uint64_t> fixed;
  if (strategy == ProbeStrategy::AdversarialSequential) fixed = sidon_probes(n, probe_count);

  std::vector<std::uint8_t> hit(trials, 0);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      if (probe_count < 2) continue;
      hit[t] = run_trial(n, probe_count, derive_seed(seed, t), fixed, gens) ? 1 : 0;
    }
  };
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(threads, trials));
  if (workers <= 1) {
    work(0, trials);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, trials * w / workers, trials * (w + 1) / workers);
  }

  CollisionStats s;
  s.n = n;
  s.probe_count = probe_count;
  s.trials = trials;
  s.strategy = strategy;
  for (auto h : hit) s.successes += h;
  s.empirical_success = static_cast<double>(s.successes) / static_cast<double>(trials);
  const double e = static_cast<double>(probe_count);
  s.predicted = e * (e - 1.0) / (2.0 * (std::ldexp(1.0, n) - 1.0));
  const double p = std::min(s.predicted, 1.0);
  s.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return s;
}

std::vector<std::pair<BitVec, BitVec>> negation_pairs(int n) {
  if (n < 2) throw InvalidInput("negation construction needs n >= 2");
  require(n <= kMaxElementBits, "negation_pairs: width too large");
  const std::uint64_t half = std::uint64_t{1} << (n - 2);
  std::vector<std::pair<BitVec, BitVec>> out;
  out.reserve(half);
  // First coordinate is the most significant bit, so these are 0..2^(n-1)-1.
  for (std::uint64_t i = 0; i < half; ++i) out.emplace_back(BitVec(n, i), BitVec(n, half + i));
  return out;
}

Congruence theta_Y_neg(std::span<const int> y, int n) {
  const auto c = negation_pairs(n);
  std::vector<std::uint64_t> label(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < label.size(); ++x) label[x] = x;
  const std::uint64_t all = BitVec::mask_for(n);
  for (int i : y) {
    require(i >= 0 && static_cast<std::size_t>(i) < c.size(), "theta_Y_neg: pair index out of range");
    const auto a = c[i].first.value(), b = c[i].second.value();
    label[b] = a;
    label[b ^ all] = a ^ all;
  }
  return Congruence::from_labels(n, label);
}

}  // namespace hkp
