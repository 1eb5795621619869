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

#include "hkp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hkp/error.hpp"

namespace hkp {

int codeword_width(std::uint64_t blocks) {
  if (blocks <= 2) return 1;
  return std::bit_width(blocks - 1);
}

HiddenOracle::HiddenOracle(const Congruence& theta, const GeneratorSet& gens)
    : n_(theta.n()), m_(codeword_width(theta.num_blocks())), hidden_(theta), state_(std::make_unique<Shared>()) {
  if (!is_congruence(theta, gens)) throw NotACongruence("hidden partition is not a congruence of the algebra");
  codeword_.assign(theta.element_count(), 0);
  std::vector<std::uint64_t> code_of_rep(theta.element_count(), 0);
  std::uint64_t next = 0;
  for (std::uint64_t x = 0; x < theta.element_count(); ++x) {
    if (theta.rep(x) == x) code_of_rep[x] = next++;
    codeword_[x] = code_of_rep[theta.rep(x)];
  }
}

std::uint64_t HiddenOracle::lookup(std::uint64_t x) {
  state_->count.fetch_add(1);
  const std::uint64_t y = codeword_[x];
  if (state_->recording) {
    std::lock_guard guard(state_->lock);
    state_->transcript.emplace_back(x, y);
  }
  return y;
}

BitVec HiddenOracle::query(const BitVec& x) {
  require(x.width() == n_, "query: input width differs from n");
  return BitVec(m_, lookup(x.value()));
}

std::pair<BitVec, BitVec> HiddenOracle::ReversibleView::operator()(const BitVec& x, const BitVec& y) const {
  require(x.width() == oracle_->n_ && y.width() == oracle_->m_, "reversible_view: register widths differ from (n, m)");
  return {x, BitVec(y.width(), y.value() ^ oracle_->lookup(x.value()))};
}

void HiddenOracle::apply_unitary(std::span<std::complex<double>> amplitudes) {
  const std::uint64_t ydim = std::uint64_t{1} << m_;
  if (amplitudes.size() != (std::uint64_t{1} << (n_ + m_)))
    throw ContractViolation("apply_unitary: state dimension differs from 2^(n+m)");
  state_->count.fetch_add(1);
  std::vector<std::complex<double>> row(ydim);
  for (std::uint64_t x = 0; x < codeword_.size(); ++x) {
    const std::uint64_t c = codeword_[x];
    if (c == 0) continue;
    auto slice = amplitudes.subspan(x * ydim, ydim);
    for (std::uint64_t y = 0; y < ydim; ++y) row[y ^ c] = slice[y];
    std::copy(row.begin(), row.end(), slice.begin());
  }
}

void HiddenOracle::set_recording(bool on) { state_->recording = on; }

std::vector<std::pair<BitVec, BitVec>> HiddenOracle::transcript() const {
  std::lock_guard guard(state_->lock);
  std::vector<std::pair<BitVec, BitVec>> out;
  out.reserve(state_->transcript.size());
  for (auto [x, y] : state_->transcript) out.emplace_back(BitVec(n_, x), BitVec(m_, y));
  return out;
}

std::string HiddenOracle::transcript_csv() const {
  std::ostringstream os;
  os << "index,x,phi_x\n";
  std::size_t i = 0;
  for (const auto& [x, y] : transcript()) os << i++ << ',' << x.str() << ',' << y.str() << '\n';
  return os.str();
}

}  // namespace hkp
