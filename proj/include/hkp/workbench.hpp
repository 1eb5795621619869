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
#include <string>
#include <string_view>
#include <vector>

#include "hkp/clone.hpp"
#include "hkp/congruence.hpp"
#include "hkp/io.hpp"

namespace hkp {

/// A random congruence of (gens)^n. For n <= 3 it is drawn uniformly from
/// enumerate_congruences; above that from a construction family chosen by
/// the classification:
///   BothPoly            ker(proj_I) for a random I
///   QuantumOnlySpeedup  cosets of a subspace spanned by random vectors
///   B <= U              θ_Y for a random Y
///   B <= MEET or JOIN   Cg(Z²) for a random Z in the middle layer or its dual
///   otherwise           Cg of one random pair
/// Every result passes is_congruence.
Congruence random_hidden_congruence(const GeneratorSet& gens, int n, std::uint64_t seed);

/// Hidden-congruence spec:
///   random:SEED        random_hidden_congruence
///   identity | total
///   proj:I             ker(proj_I), I a comma list of 1-based coordinates
///   xor:BITS           θ_z with z = BITS
///   span:B1,B2,...     cosets of the span of the listed vectors
///   anything else      path to a congruence JSON file
Congruence hidden_from_spec(std::string_view spec, const GeneratorSet& gens, int n);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

std::span<const std::string_view> verify_suite_names();

/// Runs a named battery (simon-dual, cd-projections, ap-cong, jonsson,
/// hardness) or all of them. Throws InvalidInput for an unknown name.
std::vector<SuiteResult> run_verify(std::string_view suite);

io::Json to_json(const std::vector<SuiteResult>& results);

struct ExperimentConfig {
  std::string name;  // antichain | collision | negation | speedup
  int n = 4;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  /// collision only; empty means powers of two from 2 up to 2^(n/2 + 1).
  std::vector<std::uint64_t> probes;
  /// collision only; empty means both strategies.
  std::vector<ProbeStrategy> strategies;
};

/// {"experiment", "config", "rows": [...]} with one flat object per
/// configuration.
io::Json run_experiment(const ExperimentConfig& config);

/// Speedup rows for n in [n_min, n_max] on AP0: Simon with τ = 2^n against
/// the exhaustive classical solver on the same random subspace congruence.
io::Json speedup_rows(int n_min, int n_max, std::uint64_t seed);

}  // namespace hkp
