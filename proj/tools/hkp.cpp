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

// hkp: command-line front end over the C API in hkp/hkp.h.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hkp/hkp.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNoVerdict = 3;

// Carries a status out of nested helpers to main's exit-code mapping.
struct ApiError {
  hkp_status status;
  std::string message;
};

int exit_code_for(hkp_status s) {
  switch (s) {
    case HKP_OK: return kExitOk;
    case HKP_ERR_UNCLASSIFIED:
    case HKP_ERR_INTRACTABLE: return kExitNoVerdict;
    case HKP_ERR_VERIFY_FAILED:
    case HKP_ERR_INTERNAL: return kExitFailure;
    default: return kExitValidation;
  }
}

void check(hkp_status s) {
  if (s != HKP_OK) throw ApiError{s, hkp_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  hkp_string_free(s);
  return out;
}

struct GensDeleter {
  void operator()(hkp_gens* g) const { hkp_gens_free(g); }
};
struct CongruenceDeleter {
  void operator()(hkp_congruence* c) const { hkp_congruence_free(c); }
};
struct OracleDeleter {
  void operator()(hkp_oracle* o) const { hkp_oracle_free(o); }
};
using GensPtr = std::unique_ptr<hkp_gens, GensDeleter>;
using CongruencePtr = std::unique_ptr<hkp_congruence, CongruenceDeleter>;
using OraclePtr = std::unique_ptr<hkp_oracle, OracleDeleter>;

struct Options {
  std::string clone;
  std::string gens;
  int n = 0;
  std::string hidden;
  double tau = 2.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  bool exhaustive = false;
  std::string output;
  std::string format = "json";
  int threads = 1;
  std::string suite;
  std::string name;
  std::vector<std::uint64_t> probes;
  std::vector<std::string> strategies;
  std::string transcript;
  std::string seed_source = "default";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ApiError{HKP_ERR_NOT_FOUND, "cannot open \"" + path + "\""};
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline JSON when it starts with '[' or '{', otherwise a path to a JSON file.
std::string json_argument(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (value[first] == '[' || value[first] == '{')) return value;
  return read_file(value);
}

GensPtr load_gens(const Options& o) {
  if (o.clone.empty() == o.gens.empty())
    throw ApiError{HKP_ERR_INVALID_ARGUMENT, "exactly one of --clone or --gens is required"};
  hkp_gens* g = nullptr;
  if (!o.clone.empty()) check(hkp_gens_from_clone_id(o.clone.c_str(), &g));
  else check(hkp_gens_from_json(json_argument(o.gens).c_str(), &g));
  return GensPtr(g);
}

Json algebra_echo(const Options& o, const hkp_gens* g) {
  if (!o.clone.empty()) return Json(o.clone);
  char* s = nullptr;
  check(hkp_gens_to_json(g, &s));
  return Json::parse(take(s));
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw ApiError{HKP_ERR_INVALID_ARGUMENT, "cannot write \"" + o.output + "\""};
  out << text;
}

std::string to_csv(const Json& rows) {
  char* s = nullptr;
  check(hkp_json_rows_to_csv(rows.dump().c_str(), &s));
  return take(s);
}

// JSON report, or the CSV projection given by `rows`.
void emit_report(const Options& o, const Json& report, const Json& rows) {
  if (o.format == "csv") emit(o, to_csv(rows));
  else emit(o, report.dump(2) + "\n");
}

int cmd_classify(const Options& o) {
  auto gens = load_gens(o);
  char* s = nullptr;
  const hkp_status st = hkp_classify(gens.get(), &s);
  Json report{{"command", "classify"}, {"config", {{"algebra", algebra_echo(o, gens.get())}}}};
  if (st == HKP_ERR_UNCLASSIFIED) {
    report["case"] = "Unclassified";
    report["witnesses"] = Json::array();
    report["message"] = std::string(hkp_last_error());
  } else {
    check(st);
    const Json result = Json::parse(take(s));
    for (auto& [k, v] : result.items()) report[k] = v;
  }
  std::string witnesses;
  for (const auto& w : report["witnesses"]) witnesses += (witnesses.empty() ? "" : "; ") + w.get<std::string>();
  emit_report(o, report, Json::array({{{"case", report["case"]}, {"witnesses", witnesses}}}));
  return exit_code_for(st);
}

Json common_config(const Options& o, const hkp_gens* gens) {
  return Json{{"algebra", algebra_echo(o, gens)}, {"n", o.n}, {"hidden", o.hidden}};
}

CongruencePtr load_hidden(const Options& o, const hkp_gens* gens) {
  hkp_congruence* c = nullptr;
  check(hkp_congruence_from_spec(o.hidden.c_str(), gens, o.n, &c));
  return CongruencePtr(c);
}

Json congruence_json(const hkp_congruence* c) {
  char* s = nullptr;
  check(hkp_congruence_to_json(c, &s));
  return Json::parse(take(s));
}

int cmd_solve(const Options& o) {
  auto gens = load_gens(o);
  auto hidden = load_hidden(o, gens.get());
  hkp_oracle* raw = nullptr;
  check(hkp_oracle_create(hidden.get(), gens.get(), &raw));
  OraclePtr oracle(raw);
  if (!o.transcript.empty()) check(hkp_oracle_set_recording(oracle.get(), 1));

  hkp_solve_options opts = hkp_solve_options_default();
  opts.tau = o.tau;
  opts.seed = o.seed;
  opts.exhaustive_fallback = o.exhaustive ? 1 : 0;
  char* s = nullptr;
  const hkp_status st = hkp_solve(gens.get(), oracle.get(), &opts, &s);
  if (st != HKP_ERR_INTRACTABLE) check(st);
  const std::string verdict = hkp_last_error();
  const Json result = Json::parse(take(s));

  Json config = common_config(o, gens.get());
  config["tau"] = o.tau;
  config["seed"] = o.seed;
  config["seed_source"] = o.seed_source;
  config["exhaustive"] = o.exhaustive;
  const Json expected = congruence_json(hidden.get());
  Json report{{"command", "solve"}, {"config", config}, {"report", result}, {"hidden", expected}};
  report["correct"] = result["result"].is_null() ? Json(nullptr) : Json(result["result"] == expected);

  if (!o.transcript.empty()) {
    check(hkp_oracle_transcript_csv(oracle.get(), &s));
    std::ofstream(o.transcript, std::ios::binary) << take(s);
  }
  Json row{{"case", result.value("case", "")},
           {"method", result["method"]},
           {"solved", result["solved"]},
           {"queries", result["queries"]},
           {"samples", result.value("samples", 0)},
           {"correct", report["correct"]},
           {"seed", o.seed}};
  emit_report(o, report, Json::array({row}));
  if (st == HKP_ERR_INTRACTABLE) std::cerr << "hkp: " << verdict << "\n";
  return exit_code_for(st);
}

int cmd_simulate(const Options& o) {
  auto gens = load_gens(o);
  auto hidden = load_hidden(o, gens.get());
  hkp_oracle* raw = nullptr;
  check(hkp_oracle_create(hidden.get(), gens.get(), &raw));
  OraclePtr oracle(raw);
  char* s = nullptr;
  check(hkp_simulate(oracle.get(), o.samples, o.seed, &s));
  Json sim = Json::parse(take(s));
  Json config = common_config(o, gens.get());
  config["samples"] = o.samples;
  config["seed"] = o.seed;
  config["seed_source"] = o.seed_source;
  Json report{{"command", "simulate"}, {"config", config}};
  for (auto& [k, v] : sim.items()) report[k] = v;
  Json rows = Json::array();
  for (auto& [outcome, p] : sim["distribution"]["probabilities"].items())
    rows.push_back({{"outcome", outcome}, {"probability", p}});
  emit_report(o, report, rows);
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  auto gens = load_gens(o);
  char* s = nullptr;
  check(hkp_enumerate(gens.get(), o.n, &s));
  Json en = Json::parse(take(s));
  Json report{{"command", "enumerate"}, {"config", {{"algebra", algebra_echo(o, gens.get())}, {"n", o.n}}}};
  for (auto& [k, v] : en.items()) report[k] = v;
  Json rows = Json::array();
  std::size_t i = 0;
  for (const auto& c : en["congruences"]) {
    std::string blocks;
    for (const auto& b : c["blocks"]) {
      std::string block;
      for (const auto& x : b) block += (block.empty() ? "" : " ") + x.get<std::string>();
      blocks += (blocks.empty() ? "" : " | ") + block;
    }
    rows.push_back({{"index", i++}, {"num_blocks", c["blocks"].size()}, {"blocks", blocks}});
  }
  emit_report(o, report, rows);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  char* s = nullptr;
  const hkp_status st = hkp_verify(o.suite.c_str(), &s);
  if (st != HKP_ERR_VERIFY_FAILED) check(st);
  Json v = Json::parse(take(s));
  Json report{{"command", "verify"}, {"config", {{"suite", o.suite}}}};
  for (auto& [k, val] : v.items()) report[k] = val;
  Json rows = Json::array();
  for (const auto& suite : v["suites"])
    for (const auto& c : suite["checks"])
      rows.push_back({{"suite", suite["suite"]}, {"check", c["name"]}, {"passed", c["passed"]}, {"detail", c["detail"]}});
  if (o.format == "csv") {
    emit(o, to_csv(rows));
  } else if (o.output.empty()) {
    // Human-readable table on the terminal, JSON when written to a file.
    for (const auto& r : rows)
      std::cout << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["suite"].get<std::string>() << ": "
                << r["check"].get<std::string>() << " (" << r["detail"].get<std::string>() << ")\n";
    std::cout << (v["passed"].get<bool>() ? "all checks passed\n" : "some checks FAILED\n");
  } else {
    emit(o, report.dump(2) + "\n");
  }
  return exit_code_for(st);
}

int cmd_experiment(const Options& o) {
  Json config{{"name", o.name}, {"n", o.n}, {"trials", o.trials}, {"seed", o.seed}, {"threads", o.threads}};
  if (!o.probes.empty()) config["probes"] = o.probes;
  if (!o.strategies.empty()) config["strategies"] = o.strategies;
  char* s = nullptr;
  check(hkp_experiment(config.dump().c_str(), &s));
  Json result = Json::parse(take(s));
  Json report{{"command", "experiment"}, {"config", config}};
  report["config"].erase("threads");
  report["config"]["seed_source"] = o.seed_source;
  report["rows"] = result["rows"];
  if (o.format == "csv") {
    emit(o, to_csv(result["rows"]));
    // The JSON summary accompanies a CSV file on stdout.
    if (!o.output.empty()) std::cout << report.dump(2) << "\n";
  } else {
    emit(o, report.dump(2) + "\n");
  }
  return kExitOk;
}

void add_algebra(CLI::App* cmd, Options& o) {
  cmd->add_option("--clone", o.clone, "Named clone id: BOT MEET JOIN U MPT0 MPT1 AP AP0 A DM TOP");
  cmd->add_option("--gens", o.gens, "Generator JSON (inline or a file path)");
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--output,-o", o.output, "Write the report to this file instead of stdout");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Hidden Kernel Problem workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hkp_version()));
  app.add_option("--threads", o.threads, "Worker threads for experiments (default 1)")
      ->check(CLI::Range(1, 256));
  bool seed_given = false;
  auto seed_opt = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Master seed; HKP_SEED overrides it")->each([&](const std::string&) {
      seed_given = true;
    });
  };

  auto* classify = app.add_subcommand("classify", "Classify the HKP complexity of an algebra's powers");
  add_algebra(classify, o);
  add_output(classify, o);

  auto* solve = app.add_subcommand("solve", "Solve an HKP instance with a hidden congruence");
  add_algebra(solve, o);
  solve->add_option("--n", o.n, "Power n of the algebra")->required();
  solve->add_option("--hidden", o.hidden,
                    "Hidden congruence: random:SEED, identity, total, proj:I, xor:BITS, span:B1,B2 or a JSON file")
      ->required();
  solve->add_option("--tau", o.tau, "Confidence parameter; Simon succeeds with probability >= 1 - 1/tau")
      ->check(CLI::Range(1.0, 1e300));
  solve->add_flag("--exhaustive", o.exhaustive, "Query every element on Intractable instances (n <= 12)");
  solve->add_option("--transcript", o.transcript, "Write the classical query transcript CSV here");
  seed_opt(solve);
  add_output(solve, o);

  auto* simulate = app.add_subcommand("simulate", "Simulate the Simon circuit on a hidden-congruence oracle");
  add_algebra(simulate, o);
  simulate->add_option("--n", o.n, "Power n of the algebra")->required();
  simulate->add_option("--hidden,--oracle", o.hidden, "Hidden congruence spec, as for solve")->required();
  simulate->add_option("--samples", o.samples, "Number of sampled circuit runs");
  seed_opt(simulate);
  add_output(simulate, o);

  auto* enumerate = app.add_subcommand("enumerate", "List every congruence of a small power (n <= 4)");
  add_algebra(enumerate, o);
  enumerate->add_option("--n", o.n, "Power n of the algebra")->required();
  add_output(enumerate, o);

  auto* verify = app.add_subcommand("verify", "Run a verification battery");
  verify->add_option("--suite", o.suite, "simon-dual, cd-projections, ap-cong, jonsson, hardness or all")
      ->required();
  add_output(verify, o);

  auto* experiment = app.add_subcommand("experiment", "Run a hardness or speedup experiment");
  experiment->add_option("--name", o.name, "antichain, collision, negation or speedup")->required();
  experiment->add_option("--n", o.n, "Largest n (antichain, negation, speedup) or the width (collision)")
      ->required();
  experiment->add_option("--trials", o.trials, "Trials per configuration (collision)");
  experiment->add_option("--probes", o.probes, "Probe counts |E| (collision)");
  experiment->add_option("--strategy", o.strategies, "distinct-random and/or adversarial-sequential (collision)");
  seed_opt(experiment);
  add_output(experiment, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (const char* env = std::getenv("HKP_SEED")) {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      o.seed_source = "HKP_SEED";
    } catch (const std::exception&) {
      std::cerr << "hkp: HKP_SEED must be an unsigned integer\n";
      return kExitValidation;
    }
  } else if (seed_given) {
    o.seed_source = "--seed";
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*solve) return cmd_solve(o);
    if (*simulate) return cmd_simulate(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*verify) return cmd_verify(o);
    if (*experiment) return cmd_experiment(o);
  } catch (const ApiError& e) {
    std::cerr << "hkp: " << hkp_status_name(e.status) << ": " << e.message << "\n";
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "hkp: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
