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

#include "hkp/workbench.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hkp/error.hpp"
#include "hkp/gf2.hpp"
#include "hkp/hardness.hpp"
#include "hkp/oracle.hpp"
#include "hkp/quantum.hpp"
#include "hkp/random.hpp"
#include "hkp/solvers.hpp"

namespace hkp {

namespace {

Gf2Subspace random_subspace(Rng& rng, int n) {
  Gf2Matrix m(n);
  const auto k = rng.below(static_cast<std::uint64_t>(n) + 1);
  for (std::uint64_t i = 0; i < k; ++i) m.add_row(BitVec(n, rng.next() & BitVec::mask_for(n)));
  return row_reduce(m);
}

Congruence star_cg(std::span<const std::uint64_t> members, const GeneratorSet& gens, int n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (auto v : members) pairs.emplace_back(members.front(), v);
  return cg(pairs, gens, n);
}

}  // namespace

Congruence random_hidden_congruence(const GeneratorSet& gens, int n, std::uint64_t seed) {
  if (n < 1 || n > 20) throw InvalidInput("random hidden congruence needs 1 <= n <= 20");
  Rng rng(seed);
  if (n <= 3) {
    const auto all = enumerate_congruences(gens, n);
    return all[rng.below(all.size())];
  }
  std::optional<Case> kind;
  try {
    kind = classify(gens).kind;
  } catch (const Unclassified&) {
  }
  if (kind == Case::BothPoly) {
    std::vector<int> coords;
    for (int i = 1; i <= n; ++i)
      if (rng.below(2)) coords.push_back(i);
    return projection_kernel(n, coords);
  }
  if (kind == Case::QuantumOnlySpeedup) return coset_congruence(random_subspace(rng, n));
  if (kind == Case::Intractable) {
    if (clone_leq(gens, named_clone(CloneId::U))) {
      std::vector<int> y;
      for (int i = 0; i < (1 << (n - 2)); ++i)
        if (rng.below(2)) y.push_back(i);
      return theta_Y_neg(y, n);
    }
    const bool meet = clone_leq(gens, named_clone(CloneId::Meet));
    if ((meet || clone_leq(gens, named_clone(CloneId::Join))) && n <= 12) {
      std::vector<std::uint64_t> z;
      for (const auto& v : middle_layer(n)) {
        // The dual layer has ⌊n/2⌋ ones instead of ⌊n/2⌋ zeros.
        const std::uint64_t x = meet ? v.value() : (~v.value() & BitVec::mask_for(n));
        if (rng.below(2)) z.push_back(x);
      }
      if (z.empty()) return Congruence::identity(n);
      return star_cg(z, named_clone(meet ? CloneId::Meet : CloneId::Join), n);
    }
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::pair<std::uint64_t, std::uint64_t> p{rng.below(size), rng.below(size)};
  return cg(std::span(&p, 1), gens, n);
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

BitVec parse_bits(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n || s.find_first_not_of("01") != std::string::npos)
    throw InvalidInput("\"" + s + "\" is not a bitstring of length " + std::to_string(n));
  return BitVec::parse(s);
}

}  // namespace

Congruence hidden_from_spec(std::string_view spec, const GeneratorSet& gens, int n) {
  if (n < 1 || n > kMaxElementBits) throw InvalidInput("n must be in [1, " + std::to_string(kMaxElementBits) + "]");
  if (spec.starts_with("random:")) {
    const std::string s(spec.substr(7));
    std::uint64_t seed = 0;
    std::istringstream is(s);
    if (s.empty() || !(is >> seed) || !is.eof()) throw InvalidInput("random:SEED needs an unsigned integer seed");
    return random_hidden_congruence(gens, n, seed);
  }
  if (spec == "identity") return Congruence::identity(n);
  if (spec == "total") return Congruence::total(n);
  if (spec.starts_with("proj:")) {
    std::vector<int> coords;
    const auto body = spec.substr(5);
    if (!body.empty()) {
      for (const auto& tok : split(body, ',')) {
        int c = 0;
        std::istringstream is(tok);
        if (!(is >> c) || !is.eof() || c < 1 || c > n)
          throw InvalidInput("proj: coordinate \"" + tok + "\" is not in [1, n]");
        coords.push_back(c);
      }
    }
    return projection_kernel(n, coords);
  }
  if (spec.starts_with("xor:")) return theta_z_xor(parse_bits(std::string(spec.substr(4)), n));
  if (spec.starts_with("span:")) {
    Gf2Matrix m(n);
    for (const auto& tok : split(spec.substr(5), ',')) m.add_row(parse_bits(tok, n));
    return coset_congruence(row_reduce(m));
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw NotFound("cannot open hidden congruence file \"" + std::string(spec) + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  auto theta = io::congruence_from_json(io::parse_text(buf.str()));
  if (theta.n() != n) throw InvalidInput("hidden congruence width differs from --n");
  return theta;
}

// ---------------------------------------------------------------------------
// Verification batteries.

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::span<const std::string_view> verify_suite_names() {
  static constexpr std::array<std::string_view, 6> kNames{"simon-dual", "cd-projections", "ap-cong",
                                                          "jonsson",    "hardness",       "all"};
  return kNames;
}

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Number of subspaces of GF(2)^n by Gaussian binomials.
std::uint64_t subspace_count(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      num *= (std::uint64_t{1} << (n - i)) - 1;
      den *= (std::uint64_t{1} << (i + 1)) - 1;
    }
    total += num / den;
  }
  return total;
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

SuiteResult suite_simon_dual() {
  SuiteResult r{"simon-dual", {}};
  {
    std::vector<std::size_t> counts;
    bool ok = true;
    for (int w = 1; w <= 4; ++w) {
      counts.push_back(all_subspaces(w).size());
      ok = ok && counts.back() == subspace_count(w);
    }
    r.checks.push_back({"subspace counts", ok, join_counts(counts)});
  }
  {
    std::size_t cases = 0;
    bool ok = true;
    for (int w = 1; w <= 4; ++w) {
      for (const auto& d : all_subspaces(w)) {
        const auto perp = nullspace(d);
        for (std::uint64_t g = 0; g < (std::uint64_t{1} << w); ++g) {
          const BitVec gv(w, g);
          const std::int64_t want = perp.contains(gv) ? static_cast<std::int64_t>(d.size()) : 0;
          ok = ok && character_sum(d, gv) == want;
          ++cases;
        }
      }
    }
    r.checks.push_back({"character sum dichotomy", ok, std::to_string(cases) + " (subspace, g) cases"});
  }
  {
    bool ok = true;
    for (int w = 0; w <= 5; ++w)
      for (const auto& d : all_subspaces(w)) ok = ok && perp_involution_check(d);
    r.checks.push_back({"perp is an involution", ok, "widths 0..5"});
  }
  {
    double worst = 0.0;
    std::size_t cases = 0;
    const auto gens = named_clone(CloneId::AP0);
    for (int n = 1; n <= 4; ++n) {
      for (const auto& h : all_subspaces(n)) {
        HiddenOracle oracle(coset_congruence(h), gens);
        const auto dist = simon_distribution(oracle);
        const auto perp = nullspace(h);
        const double p = 1.0 / static_cast<double>(perp.size());
        for (std::uint64_t x = 0; x < dist.probs.size(); ++x)
          worst = std::max(worst, std::abs(dist.probs[x] - (perp.contains(BitVec(n, x)) ? p : 0.0)));
        ++cases;
      }
    }
    std::ostringstream d;
    d << cases << " subspaces, max deviation " << worst;
    r.checks.push_back({"Simon distribution uniform on the annihilator", worst <= 1e-9, d.str()});
  }
  return r;
}

SuiteResult suite_cd_projections() {
  SuiteResult r{"cd-projections", {}};
  for (CloneId id : {CloneId::DM, CloneId::MPT0, CloneId::MPT1, CloneId::Top}) {
    const auto gens = named_clone(id);
    std::vector<std::size_t> counts;
    bool counts_ok = true, kernels_ok = true, solver_ok = true;
    for (int n = 1; n <= 3; ++n) {
      const auto cons = enumerate_congruences(gens, n);
      counts.push_back(cons.size());
      counts_ok = counts_ok && cons.size() == (std::size_t{1} << n);
      std::set<Congruence> kernels;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> coords;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1u) coords.push_back(i + 1);
        kernels.insert(projection_kernel(n, coords));
      }
      kernels_ok = kernels_ok && std::set<Congruence>(cons.begin(), cons.end()) == kernels;
      for (const auto& theta : cons) {
        HiddenOracle oracle(theta, gens);
        const auto rep = solve_cd(oracle);
        solver_ok = solver_ok && rep.result == theta && rep.queries == static_cast<std::uint64_t>(n + 1);
      }
    }
    const std::string id_s(ascii_id(id));
    r.checks.push_back({"|Con(" + id_s + "^n)| = 2^n", counts_ok, "counts " + join_counts(counts) + " for n=1,2,3"});
    r.checks.push_back({"Con(" + id_s + "^n) = projection kernels", kernels_ok, "n=1,2,3"});
    r.checks.push_back({"solve_cd exact in n+1 queries on " + id_s, solver_ok, "every congruence, n=1,2,3"});
  }
  return r;
}

SuiteResult suite_ap_cong() {
  SuiteResult r{"ap-cong", {}};
  for (CloneId id : {CloneId::AP, CloneId::AP0, CloneId::A}) {
    const auto gens = named_clone(id);
    std::vector<std::size_t> counts;
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      const auto cons = enumerate_congruences(gens, n);
      counts.push_back(cons.size());
      std::set<Congruence> cosets;
      for (const auto& h : all_subspaces(n)) cosets.insert(coset_congruence(h));
      ok = ok && std::set<Congruence>(cons.begin(), cons.end()) == cosets;
    }
    r.checks.push_back({"Con(" + std::string(ascii_id(id)) + "^n) = subspace cosets", ok,
                        "counts " + join_counts(counts) + " for n=1,2,3"});
  }
  return r;
}

SuiteResult suite_jonsson() {
  SuiteResult r{"jonsson", {}};
  for (CloneId id : {CloneId::DM, CloneId::MPT0, CloneId::MPT1}) {
    const auto terms = jonsson_terms(id);
    r.checks.push_back({"Jonsson identities for " + std::string(ascii_id(id)), verify_jonsson(terms),
                        std::to_string(terms.size()) + " terms, 8 assignments"});
  }
  const std::vector<Term> projections{Term::variable(0), Term::variable(1), Term::variable(2)};
  r.checks.push_back({"projections are rejected", !verify_jonsson(projections), "x, y, z"});
  return r;
}

SuiteResult suite_hardness() {
  SuiteResult r{"hardness", {}};
  {
    bool ok = true;
    for (int n = 2; n <= 16; ++n) ok = ok && middle_layer(n).size() == binomial(n, n / 2);
    for (int n = 2; n <= 10; ++n) {
      const auto m = middle_layer(n);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) ok = ok && !m[i].leq(m[j]) && !m[j].leq(m[i]);
    }
    r.checks.push_back({"middle layer size and incomparability", ok, "sizes n=2..16, antichain n=2..10"});
  }
  {
    const int n = 4;
    const auto layer = middle_layer(n);
    const auto meet_gens = named_clone(CloneId::Meet);
    std::set<Congruence> seen;
    bool cong_ok = true, above_ok = true, gen_ok = true;
    std::map<std::size_t, std::set<int>> mins;
    for (unsigned mask = 0; mask < (1u << layer.size()); ++mask) {
      std::vector<BitVec> z;
      for (std::size_t i = 0; i < layer.size(); ++i)
        if ((mask >> i) & 1u) z.push_back(layer[i]);
      const auto theta = theta_Z(z, n);
      seen.insert(theta);
      cong_ok = cong_ok && is_congruence(theta, meet_gens);
      for (const auto& v : z)
        for (std::uint64_t g = 0; g < 16; ++g)
          if (g != v.value() && v.leq(BitVec(n, g))) above_ok = above_ok && !theta.related(v.value(), g);
      if (z.size() <= 3) {
        const auto m = min_generating_pairs(theta, meet_gens, 3);
        const int got = m.value_or(4);
        mins[z.size()].insert(got);
        // Every pair of θ_Z joins two members of one block, so connecting |Z| members takes |Z| − 1 pairs.
        gen_ok = gen_ok && got == std::max<int>(0, static_cast<int>(z.size()) - 1);
      }
    }
    // θ_∅ and the six singleton θ_{z} are all the identity.
    const std::size_t expected_distinct = (std::size_t{1} << layer.size()) - layer.size();
    r.checks.push_back({"theta_Z congruences of MEET^4", cong_ok, "64 subsets"});
    r.checks.push_back({"theta_Z distinct for |Z| >= 2", seen.size() == expected_distinct,
                        std::to_string(seen.size()) + " distinct of 64"});
    r.checks.push_back({"(z, g) not in theta_Z for g > z in Z", above_ok, "64 subsets"});
    std::string detail;
    for (const auto& [size, vals] : mins) {
      detail += (detail.empty() ? "" : "; ") + std::string("|Z|=") + std::to_string(size) + ":";
      for (int v : vals) detail += " " + std::to_string(v);
    }
    r.checks.push_back({"min generating pairs of theta_Z = max(|Z| - 1, 0)", gen_ok, detail});
  }
  {
    bool ok = true;
    const auto a_gens = named_clone(CloneId::A);
    for (int n = 1; n <= 4; ++n) {
      for (std::uint64_t z = 1; z < (std::uint64_t{1} << n); ++z) {
        const auto theta = theta_z_xor(BitVec(n, z));
        const std::pair<std::uint64_t, std::uint64_t> p{0, z};
        ok = ok && is_congruence(theta, a_gens) && theta == cg(std::span(&p, 1), a_gens, n);
      }
    }
    r.checks.push_back({"theta_z congruence of A^n equal to Cg(0, z)", ok, "n=1..4"});
  }
  {
    bool ok = true;
    std::vector<std::size_t> distinct;
    const auto u_gens = named_clone(CloneId::U);
    for (int n = 2; n <= 4; ++n) {
      const auto c = negation_pairs(n);
      std::set<Congruence> seen;
      for (unsigned mask = 0; mask < (1u << c.size()); ++mask) {
        std::vector<int> y;
        PairSet pairs;
        for (std::size_t i = 0; i < c.size(); ++i)
          if ((mask >> i) & 1u) {
            y.push_back(static_cast<int>(i));
            pairs.push_back(c[i]);
          }
        const auto theta = theta_Y_neg(y, n);
        ok = ok && is_congruence(theta, u_gens) && theta == cg(pairs, u_gens, n);
        seen.insert(theta);
      }
      ok = ok && seen.size() == (std::size_t{1} << c.size());
      distinct.push_back(seen.size());
    }
    r.checks.push_back({"theta_Y distinct congruences of U^n equal to Cg(Y)", ok,
                        "distinct " + join_counts(distinct) + " for n=2,3,4"});
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verify(std::string_view suite) {
  const auto names = verify_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidInput("unknown verify suite: " + std::string(suite));
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  if (all || suite == "simon-dual") out.push_back(suite_simon_dual());
  if (all || suite == "cd-projections") out.push_back(suite_cd_projections());
  if (all || suite == "ap-cong") out.push_back(suite_ap_cong());
  if (all || suite == "jonsson") out.push_back(suite_jonsson());
  if (all || suite == "hardness") out.push_back(suite_hardness());
  return out;
}

io::Json to_json(const std::vector<SuiteResult>& results) {
  io::Json suites = io::Json::array();
  bool all = true;
  for (const auto& s : results) {
    io::Json checks = io::Json::array();
    for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    suites.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"checks", std::move(checks)}});
    all = all && s.passed();
  }
  return io::Json{{"passed", all}, {"suites", std::move(suites)}};
}

// ---------------------------------------------------------------------------
// Experiments.

io::Json speedup_rows(int n_min, int n_max, std::uint64_t seed) {
  require(n_min >= 1 && n_min <= n_max && n_max <= 16, "speedup: n range must lie in [1, 16]");
  const auto gens = named_clone(CloneId::AP0);
  io::Json rows = io::Json::array();
  for (int n = n_min; n <= n_max; ++n) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(n));
    Rng rng(s);
    const auto theta = coset_congruence(random_subspace(rng, n));
    HiddenOracle quantum(theta, gens);
    const auto simon = solve_simon(quantum, std::ldexp(1.0, n), rng.next());
    HiddenOracle classical(theta, gens);
    const auto exhaustive = solve_exhaustive(classical);
    rows.push_back({{"n", n},
                    {"simon_samples", simon.samples},
                    {"simon_queries", simon.queries},
                    {"simon_correct", simon.result == theta},
                    {"exhaustive_queries", exhaustive.queries},
                    {"exhaustive_correct", exhaustive.result == theta},
                    {"query_ratio", static_cast<double>(exhaustive.queries) / static_cast<double>(simon.queries)}});
  }
  return rows;
}

namespace {

io::Json antichain_rows(int n_max) {
  require(n_max >= 2 && n_max <= 16, "antichain: n must be in [2, 16]");
  io::Json rows = io::Json::array();
  for (int n = 2; n <= n_max; ++n) {
    const auto layer = middle_layer(n);
    io::Json row{{"n", n},
                 {"middle_layer", layer.size()},
                 {"binomial", binomial(n, n / 2)},
                 {"stirling_estimate", std::ldexp(1.0, n) / std::sqrt(static_cast<double>(n))},
                 {"log2_subsets", layer.size()}};
    if (n <= 4) {
      std::set<Congruence> seen;
      for (unsigned mask = 0; mask < (1u << layer.size()); ++mask) {
        std::vector<BitVec> z;
        for (std::size_t i = 0; i < layer.size(); ++i)
          if ((mask >> i) & 1u) z.push_back(layer[i]);
        seen.insert(theta_Z(z, n));
      }
      row["distinct_theta_Z"] = seen.size();
    } else {
      row["distinct_theta_Z"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

io::Json negation_rows(int n_max) {
  require(n_max >= 2 && n_max <= 5, "negation: n must be in [2, 5]");
  const auto u_gens = named_clone(CloneId::U);
  io::Json rows = io::Json::array();
  for (int n = 2; n <= n_max; ++n) {
    const auto c = negation_pairs(n);
    std::set<Congruence> seen;
    bool all_congruences = true;
    for (unsigned mask = 0; mask < (1u << c.size()); ++mask) {
      std::vector<int> y;
      for (std::size_t i = 0; i < c.size(); ++i)
        if ((mask >> i) & 1u) y.push_back(static_cast<int>(i));
      const auto theta = theta_Y_neg(y, n);
      all_congruences = all_congruences && is_congruence(theta, u_gens);
      seen.insert(theta);
    }
    rows.push_back({{"n", n},
                    {"pairs", c.size()},
                    {"subsets", std::uint64_t{1} << c.size()},
                    {"distinct_theta_Y", seen.size()},
                    {"all_congruences", all_congruences},
                    {"exhaustive_queries", std::uint64_t{1} << n}});
  }
  return rows;
}

io::Json collision_rows(const ExperimentConfig& c) {
  std::vector<std::uint64_t> probes = c.probes;
  if (probes.empty()) {
    const std::uint64_t top = std::min<std::uint64_t>(std::uint64_t{1} << (c.n / 2 + 1), std::uint64_t{1} << c.n);
    for (std::uint64_t e = 2; e <= top; e *= 2) probes.push_back(e);
  }
  std::vector<ProbeStrategy> strategies = c.strategies;
  if (strategies.empty()) strategies = {ProbeStrategy::DistinctRandom, ProbeStrategy::AdversarialSequential};
  io::Json rows = io::Json::array();
  std::uint64_t index = 0;
  for (auto strategy : strategies) {
    for (auto e : probes) {
      auto row = io::to_json(collision_experiment(c.n, e, c.trials, derive_seed(c.seed, index++), strategy, c.threads));
      row["within_3_sigma"] = std::abs(row["empirical_success"].get<double>() - std::min(row["predicted"].get<double>(), 1.0)) <=
                              3.0 * row["sigma"].get<double>() + 1e-12;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

io::Json run_experiment(const ExperimentConfig& c) {
  io::Json rows;
  if (c.name == "antichain") rows = antichain_rows(c.n);
  else if (c.name == "collision") rows = collision_rows(c);
  else if (c.name == "negation") rows = negation_rows(c.n);
  else if (c.name == "speedup") rows = speedup_rows(4, c.n, c.seed);
  else throw InvalidInput("unknown experiment: " + c.name);
  return io::Json{{"experiment", c.name},
                  {"config", {{"n", c.n}, {"trials", c.trials}, {"seed", c.seed}}},
                  {"rows", std::move(rows)}};
}

}  // namespace hkp
