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

#include "hkp/congruence.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

#include "hkp/error.hpp"

namespace hkp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void check_width(int n) {
  if (n < 0 || n > kMaxElementBits)
    throw CapacityExceeded("power exponent n must be in [0, " + std::to_string(kMaxElementBits) + "]");
}

}  // namespace

Congruence Congruence::identity(int n) {
  check_width(n);
  std::vector<std::uint32_t> rep(std::size_t{1} << n);
  std::iota(rep.begin(), rep.end(), 0u);
  return Congruence(n, std::move(rep));
}

Congruence Congruence::total(int n) {
  check_width(n);
  return Congruence(n, std::vector<std::uint32_t>(std::size_t{1} << n, 0u));
}

Congruence Congruence::from_labels(int n, std::span<const std::uint64_t> labels) {
  check_width(n);
  require(labels.size() == (std::size_t{1} << n), "from_labels: need one label per element");
  std::vector<std::uint32_t> rep(labels.size());
  std::vector<std::pair<std::uint64_t, std::uint32_t>> first;  // label -> least member
  first.reserve(labels.size());
  for (std::uint32_t x = 0; x < labels.size(); ++x) first.emplace_back(labels[x], x);
  std::stable_sort(first.begin(), first.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < first.size();) {
    std::size_t j = i;
    const std::uint32_t least = first[i].second;  // stable sort keeps ascending x within a label
    while (j < first.size() && first[j].first == first[i].first) rep[first[j++].second] = least;
    i = j;
  }
  return Congruence(n, std::move(rep));
}

Congruence Congruence::from_blocks(int n, const std::vector<std::vector<BitVec>>& blocks) {
  check_width(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint64_t> label(size, ~std::uint64_t{0});
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidInput("congruence blocks must be non-empty");
    for (const auto& x : blocks[b]) {
      if (x.width() != n) throw InvalidInput("block element " + x.str() + " does not have width " + std::to_string(n));
      if (label[x.value()] != ~std::uint64_t{0}) throw InvalidInput("element " + x.str() + " appears in two blocks");
      label[x.value()] = b;
    }
  }
  for (std::size_t x = 0; x < size; ++x)
    if (label[x] == ~std::uint64_t{0})
      throw InvalidInput("element " + BitVec(n, x).str() + " is missing from the blocks");
  return from_labels(n, label);
}

bool Congruence::related(const BitVec& a, const BitVec& b) const {
  require(a.width() == n_ && b.width() == n_, "related: element width differs from n");
  return related(a.value(), b.value());
}

std::size_t Congruence::num_blocks() const {
  std::size_t c = 0;
  for (std::uint32_t x = 0; x < rep_.size(); ++x) c += rep_[x] == x;
  return c;
}

std::vector<std::vector<std::uint64_t>> Congruence::blocks() const {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::size_t> index(rep_.size());
  for (std::uint32_t x = 0; x < rep_.size(); ++x) {
    if (rep_[x] == x) {
      index[x] = out.size();
      out.emplace_back();
    }
    out[index[rep_[x]]].push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> Congruence::zero_block() const {
  std::vector<std::uint64_t> out;
  for (std::uint32_t x = 0; x < rep_.size(); ++x)
    if (rep_[x] == 0) out.push_back(x);
  return out;
}

bool Congruence::is_identity() const { return num_blocks() == rep_.size(); }

bool Congruence::is_total() const {
  return std::all_of(rep_.begin(), rep_.end(), [](std::uint32_t r) { return r == 0; });
}

bool Congruence::refines(const Congruence& other) const {
  require(n_ == other.n_, "refines: different n");
  for (std::uint32_t x = 0; x < rep_.size(); ++x)
    if (other.rep_[x] != other.rep_[rep_[x]]) return false;
  return true;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  require(a.n() == b.n(), "meet: different n");
  std::vector<std::uint64_t> label(a.element_count());
  for (std::uint64_t x = 0; x < label.size(); ++x) label[x] = (a.rep(x) << 32) | b.rep(x);
  return Congruence::from_labels(a.n(), label);
}

Congruence join(const Congruence& a, const Congruence& b) {
  require(a.n() == b.n(), "join: different n");
  UnionFind uf(a.element_count());
  for (std::uint32_t x = 0; x < a.element_count(); ++x) {
    uf.unite(x, static_cast<std::uint32_t>(a.rep(x)));
    uf.unite(x, static_cast<std::uint32_t>(b.rep(x)));
  }
  std::vector<std::uint64_t> label(a.element_count());
  for (std::uint32_t x = 0; x < label.size(); ++x) label[x] = uf.find(x);
  return Congruence::from_labels(a.n(), label);
}

Translations::Translations(const GeneratorSet& gens, int n) : n_(n) {
  check_width(n);
  for (const auto& g : gens.ops()) {
    const int k = g.arity();
    for (int pos = 0; pos < k; ++pos) {
      unsigned choices = 0;
      for (unsigned others = 0; others < (1u << (k - 1)); ++others) {
        unsigned u = 0;
        for (unsigned x = 0; x < 2; ++x) {
          // Insert x at argument `pos` (argument 0 is the most significant row bit).
          unsigned row = 0;
          unsigned o = others;
          for (int i = k - 1; i >= 0; --i) {
            unsigned bit;
            if (i == pos) {
              bit = x;
            } else {
              bit = o & 1u;
              o >>= 1;
            }
            row |= bit << (k - 1 - i);
          }
          u |= static_cast<unsigned>(g.at(row)) << x;
        }
        choices |= 1u << u;
      }
      const bool only_identity = choices == (1u << 2);
      const bool only_constants = (choices & 0b0110u) == 0;
      if (only_identity || only_constants) continue;
      if (std::find(choice_sets_.begin(), choice_sets_.end(), choices) == choice_sets_.end())
        choice_sets_.push_back(choices);
    }
  }
}

std::uint64_t Translations::count() const {
  std::uint64_t total = 0;
  for (unsigned c : choice_sets_) {
    std::uint64_t per = 1;
    for (int i = 0; i < n_; ++i) per *= static_cast<std::uint64_t>(std::popcount(c));
    total += per;
  }
  return total;
}

bool is_congruence(const Congruence& theta, const GeneratorSet& gens) {
  require(gens.max_arity() <= TruthTable::kMaxArity, "is_congruence: generator arity above 4");
  Translations tr(gens, theta.n());
  // Each element against its block's least member spans the relation; a
  // translation that keeps these related keeps every related pair related.
  bool ok = true;
  tr.for_each([&](const Translations::Map& p) {
    if (!ok) return;
    for (std::uint64_t x = 0; x < theta.element_count(); ++x) {
      const std::uint64_t r = theta.rep(x);
      if (r == x) continue;
      if (!theta.related(p(x), p(r))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

Congruence cg(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs, const GeneratorSet& gens, int n) {
  check_width(n);
  require(gens.max_arity() <= TruthTable::kMaxArity, "cg: generator arity above 4");
  const std::uint64_t size = std::uint64_t{1} << n;
  UnionFind uf(size);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending;
  for (auto [a, b] : pairs) {
    require(a < size && b < size, "cg: pair element outside {0,1}^n");
    if (uf.unite(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)))
      pending.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }
  Translations tr(gens, n);
  // Every merged pair is pushed once; its translates are merged in turn. The
  // pushed pairs span the relation, so this reaches the least compatible one.
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    tr.for_each([&](const Translations::Map& p) {
      const auto pa = static_cast<std::uint32_t>(p(a) & (size - 1));
      const auto pb = static_cast<std::uint32_t>(p(b) & (size - 1));
      if (uf.unite(pa, pb)) pending.emplace_back(pa, pb);
    });
  }
  std::vector<std::uint64_t> label(size);
  for (std::uint32_t x = 0; x < size; ++x) label[x] = uf.find(x);
  return Congruence::from_labels(n, label);
}

Congruence cg(const PairSet& pairs, const GeneratorSet& gens, int n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  raw.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    require(a.width() == n && b.width() == n, "cg: pair members must have width n");
    raw.emplace_back(a.value(), b.value());
  }
  return cg(std::span<const std::pair<std::uint64_t, std::uint64_t>>(raw), gens, n);
}

std::vector<Congruence> enumerate_congruences(const GeneratorSet& gens, int n, std::size_t max_count) {
  if (n < 0 || n > kMaxEnumerationBits)
    throw CapacityExceeded("enumerate_congruences supports n <= " + std::to_string(kMaxEnumerationBits));
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Congruence> principal;
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = a + 1; b < size; ++b) {
      const std::pair<std::uint64_t, std::uint64_t> p{a, b};
      principal.push_back(cg(std::span(&p, 1), gens, n));
    }
  }
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()), principal.end());

  // Every congruence is a join of principal ones.
  std::set<Congruence> found;
  std::deque<Congruence> frontier;
  auto add = [&](Congruence c) {
    if (found.insert(c).second) {
      if (found.size() > max_count)
        throw CapacityExceeded("congruence lattice has more than " + std::to_string(max_count) + " members");
      frontier.push_back(std::move(c));
    }
  };
  add(Congruence::identity(n));
  while (!frontier.empty()) {
    Congruence c = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& p : principal) add(join(c, p));
  }
  return {found.begin(), found.end()};
}

std::optional<int> min_generating_pairs(const Congruence& theta, const GeneratorSet& gens, int budget) {
  require(budget >= 0 && budget <= 3, "min_generating_pairs: budget must be in [0, 3]");
  if (theta.is_identity()) return 0;
  const int n = theta.n();
  std::vector<Congruence> principal;
  for (std::uint64_t a = 0; a < theta.element_count(); ++a) {
    for (std::uint64_t b = a + 1; b < theta.element_count(); ++b) {
      if (!theta.related(a, b)) continue;
      const std::pair<std::uint64_t, std::uint64_t> p{a, b};
      principal.push_back(cg(std::span(&p, 1), gens, n));
    }
  }
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()), principal.end());

  // A subset of theta generates something inside theta; equality is a block count check.
  const std::size_t target = theta.num_blocks();
  const std::size_t p = principal.size();
  if (budget >= 1)
    for (std::size_t i = 0; i < p; ++i)
      if (principal[i].num_blocks() == target) return 1;
  if (budget >= 2)
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j)
        if (join(principal[i], principal[j]).num_blocks() == target) return 2;
  if (budget >= 3) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        const Congruence ij = join(principal[i], principal[j]);
        for (std::size_t k = j + 1; k < p; ++k)
          if (join(ij, principal[k]).num_blocks() == target) return 3;
      }
    }
  }
  return std::nullopt;
}

Congruence projection_kernel(int n, std::span<const int> coords) {
  check_width(n);
  std::uint64_t keep = 0;
  for (int i : coords) {
    require(i >= 1 && i <= n, "projection_kernel: coordinate out of range");
    keep |= std::uint64_t{1} << (n - i);
  }
  std::vector<std::uint64_t> label(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < label.size(); ++x) label[x] = x & keep;
  return Congruence::from_labels(n, label);
}

}  // namespace hkp
