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

#include "hkp/io.hpp"

#include <sstream>

#include "hkp/error.hpp"

namespace hkp::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

BitVec bitvec_from_json(const Json& j, int n) {
  if (!j.is_string()) throw InvalidInput("congruence element must be a bitstring");
  const auto text = j.get<std::string>();
  if (static_cast<int>(text.size()) != n || text.find_first_not_of("01") != std::string::npos)
    throw InvalidInput("congruence element \"" + text + "\" is not a bitstring of length " + std::to_string(n));
  return BitVec::parse(text);
}

}  // namespace

Json to_json(const TruthTable& op) { return Json{{"arity", op.arity()}, {"table", op.str()}}; }

TruthTable truth_table_from_json(const Json& j) {
  const auto& a = field(j, "arity");
  const auto& t = field(j, "table");
  if (!a.is_number_integer()) throw InvalidInput("\"arity\" must be an integer");
  const int arity = a.get<int>();
  if (arity < 0 || arity > TruthTable::kMaxArity)
    throw InvalidInput("\"arity\" must be in [0, " + std::to_string(TruthTable::kMaxArity) + "]");
  if (!t.is_string()) throw InvalidInput("\"table\" must be a string");
  const auto bits = t.get<std::string>();
  if (bits.size() != (std::size_t{1} << arity) || bits.find_first_not_of("01") != std::string::npos)
    throw InvalidInput("\"table\" must be a 0/1 string of length 2^arity");
  return TruthTable::parse(arity, bits);
}

Json to_json(const GeneratorSet& gens) {
  Json arr = Json::array();
  for (const auto& op : gens.ops()) arr.push_back(to_json(op));
  return arr;
}

GeneratorSet gens_from_json(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "gens") : j;
  if (!arr.is_array()) throw InvalidInput("generators must be a JSON array of truth tables");
  std::vector<TruthTable> ops;
  for (const auto& e : arr) ops.push_back(truth_table_from_json(e));
  return GeneratorSet(std::move(ops));
}

Json to_json(const Congruence& theta) {
  Json blocks = Json::array();
  for (const auto& b : theta.blocks()) {
    Json block = Json::array();
    for (auto x : b) block.push_back(BitVec(theta.n(), x).str());
    blocks.push_back(std::move(block));
  }
  return Json{{"n", theta.n()}, {"blocks", std::move(blocks)}};
}

Congruence congruence_from_json(const Json& j) {
  const auto& nj = field(j, "n");
  if (!nj.is_number_integer()) throw InvalidInput("\"n\" must be an integer");
  const int n = nj.get<int>();
  if (n < 0 || n > kMaxElementBits)
    throw InvalidInput("\"n\" must be in [0, " + std::to_string(kMaxElementBits) + "]");
  const auto& bj = field(j, "blocks");
  if (!bj.is_array()) throw InvalidInput("\"blocks\" must be an array");
  std::vector<std::vector<BitVec>> blocks;
  for (const auto& b : bj) {
    if (!b.is_array()) throw InvalidInput("each block must be an array of bitstrings");
    auto& out = blocks.emplace_back();
    for (const auto& e : b) out.push_back(bitvec_from_json(e, n));
  }
  return Congruence::from_blocks(n, blocks);
}

Json to_json(const Classification& c) {
  return Json{{"case", case_name(c.kind)},
              {"witnesses", c.witnesses},
              {"primary_witness", ascii_id(c.primary_witness)}};
}

Json to_json(const SolveReport& r) {
  Json j;
  if (r.classification) j["case"] = case_name(*r.classification);
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  j["method"] = method_name(r.method);
  j["solved"] = r.result.has_value();
  j["queries"] = r.queries;
  if (r.method == Method::Simon) {
    j["samples"] = r.samples;
    j["success_target"] = r.success_target.value_or(0.0);
    j["sampled_rank"] = r.sampled_rank.value_or(0);
  }
  if (r.method == Method::Cd) j["coordinates"] = r.coordinates;
  j["result"] = r.result ? to_json(*r.result) : Json(nullptr);
  return j;
}

Json to_json(const CollisionStats& s) {
  return Json{{"n", s.n},
              {"probe_count", s.probe_count},
              {"strategy", probe_strategy_name(s.strategy)},
              {"trials", s.trials},
              {"successes", s.successes},
              {"empirical_success", s.empirical_success},
              {"predicted", s.predicted},
              {"sigma", s.sigma}};
}

Json to_json(const OutcomeDistribution& d) {
  Json probs = Json::object();
  for (std::uint64_t x = 0; x < d.probs.size(); ++x)
    if (d.probs[x] > 1e-12) probs[BitVec(d.n, x).str()] = d.probs[x];
  return Json{{"n", d.n}, {"probabilities", std::move(probs)}};
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string rows_to_csv(const Json& rows) {
  std::ostringstream os;
  if (!rows.is_array() || rows.empty()) return "";
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ',';
      const auto& v = row.contains(cols[i]) ? row.at(cols[i]) : Json(nullptr);
      if (v.is_string()) os << v.get<std::string>();
      else if (!v.is_null()) os << v.dump();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hkp::io
