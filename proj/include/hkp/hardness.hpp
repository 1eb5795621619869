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

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hkp/bitvec.hpp"
#include "hkp/congruence.hpp"

namespace hkp {

/// Vectors with exactly ⌊n/2⌋ zero coordinates, ascending; 2 <= n <= 16.
std::vector<BitVec> middle_layer(int n);

/// Cg(Z²) in the algebra ({∧,0,1})^n. Z must lie in middle_layer(n); n <= 12.
Congruence theta_Z(std::span<const BitVec> z, int n);

/// Pairs {x, x+z}; z ≠ 0^n.
Congruence theta_z_xor(const BitVec& z);

enum class ProbeStrategy { DistinctRandom, AdversarialSequential };
std::string_view probe_strategy_name(ProbeStrategy s);
ProbeStrategy parse_probe_strategy(std::string_view text);

struct CollisionStats {
  int n = 0;
  std::uint64_t probe_count = 0;
  std::uint64_t trials = 0;
  ProbeStrategy strategy = ProbeStrategy::DistinctRandom;
  std::uint64_t successes = 0;
  double empirical_success = 0.0;
  /// |E|(|E|−1) / (2(2^n − 1)); may exceed 1 for large |E|.
  double predicted = 0.0;
  /// Binomial standard deviation of the empirical rate at min(predicted, 1).
  double sigma = 0.0;
};

/// Probes in ascending order such that every pairwise XOR is new, as long as
/// such a probe exists; the remaining ones are the least unused elements.
/// While the first stretch lasts, no two probe pairs share a difference, so
/// each nonzero z is detected by at most one pair.
std::vector<std::uint64_t> sidon_probes(int n, std::uint64_t count);

/// Per trial: draw z ≠ 0 uniformly, build the θ_z oracle over {x↔y, 0},
/// evaluate it on |E| distinct probes and record whether two answers
/// collided. Trial t uses derive_seed(seed, t), so the result does not
/// depend on `threads`.
CollisionStats collision_experiment(int n, std::uint64_t probe_count, std::uint64_t trials, std::uint64_t seed,
                                    ProbeStrategy strategy, int threads = 1);

/// The pairing C = {(a_i, b_i)}: vectors with first coordinate 0 in integer
/// order, first half a_i, second half b_i. n >= 2.
std::vector<std::pair<BitVec, BitVec>> negation_pairs(int n);

/// Identity plus blocks {a_i, b_i} and {¬a_i, ¬b_i} for each selected pair
/// index i of negation_pairs(n).
Congruence theta_Y_neg(std::span<const int> y, int n);

}  // namespace hkp
