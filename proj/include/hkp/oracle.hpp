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

#include <atomic>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hkp/bitvec.hpp"
#include "hkp/clone.hpp"
#include "hkp/congruence.hpp"

namespace hkp {

namespace audit {
class Access;
}

/// Query-counting black box for a homomorphism φ: {0,1}^n → {0,1}^m whose
/// kernel is the hidden congruence. Blocks, ordered by least member, get the
/// codewords 0, 1, 2, ... so ker(φ) is exactly the hidden congruence.
class HiddenOracle {
 public:
  /// Throws NotACongruence if theta is not compatible with gens.
  HiddenOracle(const Congruence& theta, const GeneratorSet& gens);

  HiddenOracle(HiddenOracle&&) noexcept = default;
  HiddenOracle& operator=(HiddenOracle&&) noexcept = default;

  int n() const { return n_; }
  int m() const { return m_; }

  /// φ(x); one query.
  BitVec query(const BitVec& x);
  std::uint64_t query_count() const { return state_->count.load(); }

  /// (x, y) ↦ (x, y ⊕ φ(x)); every evaluation is one query.
  class ReversibleView {
   public:
    std::pair<BitVec, BitVec> operator()(const BitVec& x, const BitVec& y) const;

   private:
    friend class HiddenOracle;
    explicit ReversibleView(HiddenOracle* o) : oracle_(o) {}
    HiddenOracle* oracle_;
  };
  ReversibleView reversible_view() { return ReversibleView(this); }

  /// Applies the unitary |x, y⟩ ↦ |x, y ⊕ φ(x)⟩ to amplitudes indexed
  /// x·2^m + y. One application is one query.
  void apply_unitary(std::span<std::complex<double>> amplitudes);

  /// Accounts for re-running an already simulated circuit k more times.
  void charge_repeated_runs(std::uint64_t k) { state_->count += k; }

  /// Classical queries are appended to the transcript while recording.
  void set_recording(bool on);
  std::vector<std::pair<BitVec, BitVec>> transcript() const;
  std::string transcript_csv() const;

 private:
  friend class audit::Access;

  struct Shared {
    std::atomic<std::uint64_t> count{0};
    mutable std::mutex lock;
    std::atomic<bool> recording{false};
    std::vector<std::pair<std::uint64_t, std::uint64_t>> transcript;
  };

  std::uint64_t lookup(std::uint64_t x);

  int n_;
  int m_;
  Congruence hidden_;
  std::vector<std::uint64_t> codeword_;
  std::unique_ptr<Shared> state_;
};

/// Codeword width for a partition with `blocks` blocks: max(1, ⌈lg blocks⌉).
int codeword_width(std::uint64_t blocks);

}  // namespace hkp
