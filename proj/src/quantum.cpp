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

#include "hkp/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hkp/error.hpp"
#include "hkp/random.hpp"

namespace hkp {

namespace {

void check_register(int n, int m) {
  require(n >= 0 && m >= 0, "register sizes must be non-negative");
  if (n + m > kMaxQubits)
    throw CapacityExceeded("n + m = " + std::to_string(n + m) + " exceeds the " + std::to_string(kMaxQubits) +
                           "-qubit simulation budget");
}

}  // namespace

QuantumState::QuantumState(int n, int m) : n_(n), m_(m) {
  check_register(n, m);
  amps_.assign(std::size_t{1} << (n + m), {0.0, 0.0});
  amps_[0] = 1.0;
}

QuantumState QuantumState::basis(int n, int m, std::uint64_t x, std::uint64_t y) {
  QuantumState s(n, m);
  require(x < (std::uint64_t{1} << n) && y < (std::uint64_t{1} << m), "basis: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[(x << m) | y] = 1.0;
  return s;
}

QuantumState QuantumState::from_amplitudes(int n, int m, std::vector<std::complex<double>> amplitudes) {
  QuantumState s(n, m);
  require(amplitudes.size() == s.amps_.size(), "from_amplitudes: need 2^(n+m) amplitudes");
  s.amps_ = std::move(amplitudes);
  return s;
}

double QuantumState::norm_squared() const {
  return std::accumulate(amps_.begin(), amps_.end(), 0.0, [](double acc, auto a) { return acc + std::norm(a); });
}

void apply_hadamard_first_register(QuantumState& state) {
  auto amps = state.amplitudes();
  const double r = 1.0 / std::sqrt(2.0);
  // Butterflies over the x bits, which sit above the m bits of y.
  for (int q = state.m(); q < state.qubits(); ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const auto a = amps[i];
        const auto b = amps[i + stride];
        amps[i] = (a + b) * r;
        amps[i + stride] = (a - b) * r;
      }
    }
  }
}

void apply_oracle_unitary(QuantumState& state, HiddenOracle& oracle) {
  if (state.n() != oracle.n() || state.m() != oracle.m())
    throw ContractViolation("apply_oracle_unitary: state registers differ from the oracle's (n, m)");
  oracle.apply_unitary(state.amplitudes());
}

double OutcomeDistribution::at(const BitVec& x) const {
  require(x.width() == n, "OutcomeDistribution::at: width mismatch");
  return probs[x.value()];
}

double OutcomeDistribution::total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

OutcomeDistribution simon_distribution(HiddenOracle& oracle) {
  check_register(oracle.n(), oracle.m());
  QuantumState state(oracle.n(), oracle.m());
  apply_hadamard_first_register(state);
  apply_oracle_unitary(state, oracle);
  apply_hadamard_first_register(state);

  OutcomeDistribution dist{oracle.n(), std::vector<double>(std::size_t{1} << oracle.n(), 0.0)};
  const std::size_t ydim = std::size_t{1} << oracle.m();
  auto amps = state.amplitudes();
  for (std::size_t x = 0; x < dist.probs.size(); ++x) {
    double p = 0.0;
    for (std::size_t y = 0; y < ydim; ++y) p += std::norm(amps[x * ydim + y]);
    dist.probs[x] = p;
  }
  return dist;
}

std::vector<BitVec> sample_outcomes(const OutcomeDistribution& dist, std::uint64_t seed, std::size_t count) {
  std::vector<double> cumulative(dist.probs.size());
  std::partial_sum(dist.probs.begin(), dist.probs.end(), cumulative.begin());
  const double total = cumulative.empty() ? 0.0 : cumulative.back();
  require(total > 0.0, "sample_outcomes: empty distribution");
  Rng rng(seed);
  std::vector<BitVec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.unit() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
    out.emplace_back(dist.n, idx);
  }
  return out;
}

std::vector<BitVec> simon_sample(HiddenOracle& oracle, std::uint64_t seed, std::size_t count) {
  if (count == 0) return {};
  // The circuit is deterministic up to measurement: simulate it once, then
  // account for the remaining executions.
  const auto dist = simon_distribution(oracle);
  oracle.charge_repeated_runs(count - 1);
  return sample_outcomes(dist, seed, count);
}

}  // namespace hkp
