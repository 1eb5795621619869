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
#include <optional>
#include <string_view>
#include <vector>

#include "hkp/clone.hpp"
#include "hkp/congruence.hpp"
#include "hkp/oracle.hpp"

namespace hkp {

enum class Method { Simon, Cd, Exhaustive, None };
std::string_view method_name(Method m);

struct SolveReport {
  /// Recovered kernel; empty for an Intractable verdict without fallback.
  std::optional<Congruence> result;
  Method method = Method::None;
  /// Oracle counter delta over the solve.
  std::uint64_t queries = 0;
  /// Circuit executions (Simon only).
  std::uint64_t samples = 0;
  /// 1 − 1/τ (Simon only).
  std::optional<double> success_target;
  /// dim of the sampled span (Simon only).
  std::optional<int> sampled_rank;
  /// Coordinates I with θ = ker(proj_I), 1-based (CD only).
  std::vector<int> coordinates;
  /// Classification that drove dispatch (solve_hkp only).
  std::optional<Case> classification;
  std::vector<std::string> witnesses;
};

/// n + ⌈lg τ⌉ circuit runs; τ >= 1.
std::uint64_t simon_sample_count(int n, double tau);

/// Samples the Simon circuit, row-reduces to S ≈ H⊥ and returns the coset
/// partition of H = S⊥. Correct with probability at least 1 − 1/τ when the
/// hidden kernel is a congruence of Z_2^n. No retries.
SolveReport solve_simon(HiddenOracle& oracle, double tau, std::uint64_t seed);

/// Probes 0^n and its n single-coordinate flips (n + 1 queries); exact when
/// the hidden kernel is a projection kernel.
SolveReport solve_cd(HiddenOracle& oracle);

/// Queries every element (2^n queries) and reads the kernel off directly.
SolveReport solve_exhaustive(HiddenOracle& oracle);

inline constexpr int kMaxExhaustiveBits = 12;

struct SolveOptions {
  double tau = 2.0;
  std::uint64_t seed = 0;
  /// Run solve_exhaustive on Intractable instances (n <= 12).
  bool exhaustive_fallback = false;
};

/// Classifies gens and dispatches: BothPoly → solve_cd, QuantumOnlySpeedup →
/// solve_simon, Intractable → verdict (or the exhaustive fallback).
/// Unclassified propagates.
SolveReport solve_hkp(const GeneratorSet& gens, HiddenOracle& oracle, const SolveOptions& options);

/// Coset partition of a subspace H of Z_2^n.
Congruence coset_congruence(const class Gf2Subspace& h);

}  // namespace hkp
