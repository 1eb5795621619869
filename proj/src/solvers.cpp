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

#include "hkp/solvers.hpp"

#include <cmath>

#include "hkp/error.hpp"
#include "hkp/gf2.hpp"
#include "hkp/quantum.hpp"

namespace hkp {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Simon: return "simon";
    case Method::Cd: return "cd";
    case Method::Exhaustive: return "exhaustive";
    case Method::None: return "none";
  }
  return "?";
}

std::uint64_t simon_sample_count(int n, double tau) {
  require(tau >= 1.0 && std::isfinite(tau), "tau must be a finite number >= 1");
  return static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(std::ceil(std::log2(tau)));
}

Congruence coset_congruence(const Gf2Subspace& h) {
  const int n = h.width();
  std::vector<std::uint64_t> label(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < label.size(); ++x) label[x] = h.reduce(BitVec(n, x)).value();
  return Congruence::from_labels(n, label);
}

SolveReport solve_simon(HiddenOracle& oracle, double tau, std::uint64_t seed) {
  const std::uint64_t before = oracle.query_count();
  const std::uint64_t k = simon_sample_count(oracle.n(), tau);
  const auto samples = simon_sample(oracle, seed, k);
  Gf2Matrix rows(oracle.n(), samples);
  const auto annihilator = row_reduce(rows);
  const auto kernel_zero_block = nullspace(annihilator);

  SolveReport report;
  report.result = coset_congruence(kernel_zero_block);
  report.method = Method::Simon;
  report.samples = k;
  report.success_target = 1.0 - 1.0 / tau;
  report.sampled_rank = annihilator.dim();
  report.queries = oracle.query_count() - before;
  return report;
}

SolveReport solve_cd(HiddenOracle& oracle) {
  const std::uint64_t before = oracle.query_count();
  const int n = oracle.n();
  const BitVec base = BitVec::zeros(n);
  const BitVec at_base = oracle.query(base);
  SolveReport report;
  for (int i = 1; i <= n; ++i)
    if (oracle.query(base.flipped(i)) != at_base) report.coordinates.push_back(i);
  report.result = projection_kernel(n, report.coordinates);
  report.method = Method::Cd;
  report.queries = oracle.query_count() - before;
  return report;
}

SolveReport solve_exhaustive(HiddenOracle& oracle) {
  const std::uint64_t before = oracle.query_count();
  const int n = oracle.n();
  std::vector<std::uint64_t> label(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < label.size(); ++x) label[x] = oracle.query(BitVec(n, x)).value();
  SolveReport report;
  report.result = Congruence::from_labels(n, label);
  report.method = Method::Exhaustive;
  report.queries = oracle.query_count() - before;
  return report;
}

SolveReport solve_hkp(const GeneratorSet& gens, HiddenOracle& oracle, const SolveOptions& options) {
  const auto cls = classify(gens);
  SolveReport report;
  switch (cls.kind) {
    case Case::BothPoly: report = solve_cd(oracle); break;
    case Case::QuantumOnlySpeedup: report = solve_simon(oracle, options.tau, options.seed); break;
    case Case::Intractable:
      if (options.exhaustive_fallback) {
        if (oracle.n() > kMaxExhaustiveBits)
          throw CapacityExceeded("exhaustive fallback supports n <= " + std::to_string(kMaxExhaustiveBits));
        report = solve_exhaustive(oracle);
      }
      break;
  }
  report.classification = cls.kind;
  report.witnesses = cls.witnesses;
  return report;
}

}  // namespace hkp
