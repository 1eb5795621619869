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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hkp/bitvec.hpp"

namespace hkp {

/// Finite, duplicate-free set of basic operations of a 2-element algebra.
/// Stored sorted so equal sets compare equal.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<TruthTable> ops);
  GeneratorSet(std::initializer_list<TruthTable> ops) : GeneratorSet(std::vector<TruthTable>(ops)) {}

  std::span<const TruthTable> ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }
  std::size_t size() const { return ops_.size(); }
  int max_arity() const;
  bool contains(const TruthTable& op) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<TruthTable> ops_;
};

/// The labelled clones of the catalog.
enum class CloneId { Bottom, Meet, Join, U, MPT0, MPT1, AP, AP0, A, DM, Top };

std::span<const CloneId> all_named_clones();
/// ASCII id used on the command line: BOT, MEET, JOIN, U, MPT0, MPT1, AP, AP0, A, DM, TOP.
std::string_view ascii_id(CloneId id);
/// Throws InvalidInput for an unknown id.
CloneId parse_clone_id(std::string_view text);
/// Generators as listed in the catalog table, e.g. DM -> {maj}, A -> {x↔y, 0}.
GeneratorSet named_clone(CloneId id);

/// The k-ary members of Clo(gens), sorted, 0 <= k <= 4.
std::vector<TruthTable> term_closure(const GeneratorSet& gens, int arity);

/// Whether `op` is a term operation of gens. Stops as soon as it is produced.
/// A 0-ary op is tested as the constant unary operation with its value.
bool in_clone(const TruthTable& op, const GeneratorSet& gens);

/// Clo(F) ⊆ Clo(G).
bool clone_leq(const GeneratorSet& f, const GeneratorSet& g);

/// Checks the Jónsson identities for J1..J_{2m+1} over all 8 Boolean
/// assignments. Even-length or empty sequences, and terms using more than
/// three variables, are rejected (false).
bool verify_jonsson(std::span<const Term> terms);

/// Jónsson terms built from the generator of DM, MPT0 or MPT1.
/// Throws ContractViolation for other clones.
std::vector<Term> jonsson_terms(CloneId witness);

enum class Case { BothPoly, QuantumOnlySpeedup, Intractable };
std::string_view case_name(Case c);

struct Classification {
  Case kind;
  /// Containment tests that fired, e.g. "DM <= B", "B <= A".
  std::vector<std::string> witnesses;
  /// The catalog clone behind the first fired test.
  CloneId primary_witness;
};

/// Three-way complexity classification of HKP on powers of the algebra.
/// Throws Unclassified when no case applies.
Classification classify(const GeneratorSet& gens);

}  // namespace hkp
