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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hkp/bitvec.hpp"
#include "hkp/oracle.hpp"

namespace hkp {

/// Largest register the statevector simulator allocates (2^24 amplitudes).
inline constexpr int kMaxQubits = 24;

/// Pure state on n + m qubits. Basis index x·2^m + y: x is the first
/// (measured) register, y the oracle's output register.
class QuantumState {
 public:
  /// |0^n⟩ ⊗ |0^m⟩.
  QuantumState(int n, int m);
  static QuantumState basis(int n, int m, std::uint64_t x, std::uint64_t y);
  static QuantumState from_amplitudes(int n, int m, std::vector<std::complex<double>> amplitudes);

  int n() const { return n_; }
  int m() const { return m_; }
  int qubits() const { return n_ + m_; }

  std::span<std::complex<double>> amplitudes() { return amps_; }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::complex<double> amplitude(std::uint64_t x, std::uint64_t y) const { return amps_[(x << m_) | y]; }

  double norm_squared() const;

 private:
  int n_;
  int m_;
  std::vector<std::complex<double>> amps_;
};

/// H on each qubit of the first register, identity on the second.
void apply_hadamard_first_register(QuantumState& state);
/// The oracle's permutation unitary; one query.
void apply_oracle_unitary(QuantumState& state, HiddenOracle& oracle);

/// Exact marginal of the first register: probs[x] for x in {0,1}^n.
struct OutcomeDistribution {
  int n = 0;
  std::vector<double> probs;

  double at(const BitVec& x) const;
  double total() const;
};

/// Runs (H⊗I) φ̂ (H⊗I) on |0^(n+m)⟩ and marginalizes over the second
/// register. One circuit execution, one query.
OutcomeDistribution simon_distribution(HiddenOracle& oracle);

/// Independent measurement outcomes of `count` circuit executions; charges
/// `count` queries.
std::vector<BitVec> simon_sample(HiddenOracle& oracle, std::uint64_t seed, std::size_t count);

/// Draws from an already computed distribution (no oracle involved).
std::vector<BitVec> sample_outcomes(const OutcomeDistribution& dist, std::uint64_t seed, std::size_t count);

}  // namespace hkp
