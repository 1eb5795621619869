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

#include "hkp/hkp.h"

#include <cstring>
#include <new>
#include <string>

#include "hkp/error.hpp"
#include "hkp/io.hpp"
#include "hkp/oracle.hpp"
#include "hkp/quantum.hpp"
#include "hkp/solvers.hpp"
#include "hkp/workbench.hpp"

struct hkp_gens {
  hkp::GeneratorSet value;
};
struct hkp_congruence {
  hkp::Congruence value;
};
struct hkp_oracle {
  hkp::HiddenOracle value;
};

namespace {

thread_local std::string last_error;

hkp_status fail(hkp_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
hkp_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const hkp::ParseError& e) {
    return fail(HKP_ERR_PARSE, e.what());
  } catch (const hkp::NotFound& e) {
    return fail(HKP_ERR_NOT_FOUND, e.what());
  } catch (const hkp::InvalidInput& e) {
    return fail(HKP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const hkp::ContractViolation& e) {
    return fail(HKP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const hkp::CapacityExceeded& e) {
    return fail(HKP_ERR_CAPACITY, e.what());
  } catch (const hkp::NotACongruence& e) {
    return fail(HKP_ERR_NOT_CONGRUENCE, e.what());
  } catch (const hkp::Unclassified& e) {
    return fail(HKP_ERR_UNCLASSIFIED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HKP_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(HKP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HKP_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define HKP_REQUIRE_ARG(cond, what) \
  if (!(cond)) return fail(HKP_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* hkp_version(void) { return "1.0.0"; }

const char* hkp_status_name(hkp_status status) {
  switch (status) {
    case HKP_OK: return "ok";
    case HKP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HKP_ERR_PARSE: return "parse error";
    case HKP_ERR_CAPACITY: return "capacity exceeded";
    case HKP_ERR_NOT_CONGRUENCE: return "not a congruence";
    case HKP_ERR_UNCLASSIFIED: return "unclassified";
    case HKP_ERR_INTRACTABLE: return "intractable";
    case HKP_ERR_NOT_FOUND: return "not found";
    case HKP_ERR_VERIFY_FAILED: return "verification failed";
    case HKP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hkp_last_error(void) { return last_error.c_str(); }

void hkp_string_free(char* s) { delete[] s; }

hkp_status hkp_gens_from_clone_id(const char* id, hkp_gens** out) {
  return guarded([&] {
    HKP_REQUIRE_ARG(id && out, "null argument");
    *out = new hkp_gens{hkp::named_clone(hkp::parse_clone_id(id))};
    return HKP_OK;
  });
}

hkp_status hkp_gens_from_json(const char* json, hkp_gens** out) {
  return guarded([&] {
    HKP_REQUIRE_ARG(json && out, "null argument");
    *out = new hkp_gens{hkp::io::gens_from_json(hkp::io::parse_text(json))};
    return HKP_OK;
  });
}

hkp_status hkp_gens_to_json(const hkp_gens* gens, char** out_json) {
  return guarded([&] {
    HKP_REQUIRE_ARG(gens && out_json, "null argument");
    *out_json = dup_string(hkp::io::to_json(gens->value).dump());
    return HKP_OK;
  });
}

void hkp_gens_free(hkp_gens* gens) { delete gens; }

hkp_status hkp_classify(const hkp_gens* gens, char** out_json) {
  return guarded([&] {
    HKP_REQUIRE_ARG(gens && out_json, "null argument");
    *out_json = dup_string(hkp::io::to_json(hkp::classify(gens->value)).dump());
    return HKP_OK;
  });
}

hkp_status hkp_congruence_from_json(const char* json, hkp_congruence** out) {
  return guarded([&] {
    HKP_REQUIRE_ARG(json && out, "null argument");
    *out = new hkp_congruence{hkp::io::congruence_from_json(hkp::io::parse_text(json))};
    return HKP_OK;
  });
}

hkp_status hkp_congruence_from_spec(const char* spec, const hkp_gens* gens, int n, hkp_congruence** out) {
  return guarded([&] {
    HKP_REQUIRE_ARG(spec && gens && out, "null argument");
    *out = new hkp_congruence{hkp::hidden_from_spec(spec, gens->value, n)};
    return HKP_OK;
  });
}

hkp_status hkp_congruence_to_json(const hkp_congruence* theta, char** out_json) {
  return guarded([&] {
    HKP_REQUIRE_ARG(theta && out_json, "null argument");
    *out_json = dup_string(hkp::io::to_json(theta->value).dump());
    return HKP_OK;
  });
}

int hkp_congruence_width(const hkp_congruence* theta) { return theta ? theta->value.n() : -1; }

hkp_status hkp_congruence_is_congruence(const hkp_congruence* theta, const hkp_gens* gens, int* out) {
  return guarded([&] {
    HKP_REQUIRE_ARG(theta && gens && out, "null argument");
    *out = hkp::is_congruence(theta->value, gens->value) ? 1 : 0;
    return HKP_OK;
  });
}

void hkp_congruence_free(hkp_congruence* theta) { delete theta; }

hkp_status hkp_enumerate(const hkp_gens* gens, int n, char** out_json) {
  return guarded([&] {
    HKP_REQUIRE_ARG(gens && out_json, "null argument");
    HKP_REQUIRE_ARG(n >= 0, "n must be non-negative");
    const auto all = hkp::enumerate_congruences(gens->value, n);
    hkp::io::Json list = hkp::io::Json::array();
    for (const auto& c : all) list.push_back(hkp::io::to_json(c));
    hkp::io::Json j{{"n", n}, {"count", all.size()}, {"congruences", std::move(list)}};
    *out_json = dup_string(j.dump());
    return HKP_OK;
  });
}

hkp_status hkp_oracle_create(const hkp_congruence* hidden, const hkp_gens* gens, hkp_oracle** out) {
  return guarded([&] {
    HKP_REQUIRE_ARG(hidden && gens && out, "null argument");
    *out = new hkp_oracle{hkp::HiddenOracle(hidden->value, gens->value)};
    return HKP_OK;
  });
}

int hkp_oracle_input_width(const hkp_oracle* oracle) { return oracle ? oracle->value.n() : -1; }
int hkp_oracle_output_width(const hkp_oracle* oracle) { return oracle ? oracle->value.m() : -1; }

hkp_status hkp_oracle_query(hkp_oracle* oracle, const char* x, char** out_bits) {
  return guarded([&] {
    HKP_REQUIRE_ARG(oracle && x && out_bits, "null argument");
    const std::string bits(x);
    HKP_REQUIRE_ARG(static_cast<int>(bits.size()) == oracle->value.n() && bits.find_first_not_of("01") == std::string::npos,
                    "query input must be a 0/1 string of length n");
    *out_bits = dup_string(oracle->value.query(hkp::BitVec::parse(bits)).str());
    return HKP_OK;
  });
}

uint64_t hkp_oracle_query_count(const hkp_oracle* oracle) { return oracle ? oracle->value.query_count() : 0; }

hkp_status hkp_oracle_set_recording(hkp_oracle* oracle, int on) {
  return guarded([&] {
    HKP_REQUIRE_ARG(oracle, "null argument");
    oracle->value.set_recording(on != 0);
    return HKP_OK;
  });
}

hkp_status hkp_oracle_transcript_csv(const hkp_oracle* oracle, char** out_csv) {
  return guarded([&] {
    HKP_REQUIRE_ARG(oracle && out_csv, "null argument");
    *out_csv = dup_string(oracle->value.transcript_csv());
    return HKP_OK;
  });
}

void hkp_oracle_free(hkp_oracle* oracle) { delete oracle; }

hkp_status hkp_simulate(hkp_oracle* oracle, uint64_t samples, uint64_t seed, char** out_json) {
  return guarded([&] {
    HKP_REQUIRE_ARG(oracle && out_json, "null argument");
    auto& o = oracle->value;
    const std::uint64_t before = o.query_count();
    const auto dist = hkp::simon_distribution(o);
    if (samples > 1) o.charge_repeated_runs(samples - 1);
    hkp::io::Json outcomes = hkp::io::Json::array();
    for (const auto& x : hkp::sample_outcomes(dist, seed, samples)) outcomes.push_back(x.str());
    hkp::io::Json j{{"distribution", hkp::io::to_json(dist)},
                    {"samples", std::move(outcomes)},
                    {"queries", o.query_count() - before}};
    *out_json = dup_string(j.dump());
    return HKP_OK;
  });
}

hkp_solve_options hkp_solve_options_default(void) { return hkp_solve_options{2.0, 0, 0}; }

hkp_status hkp_solve(const hkp_gens* gens, hkp_oracle* oracle, const hkp_solve_options* options, char** out_json) {
  return guarded([&] {
    HKP_REQUIRE_ARG(gens && oracle && out_json, "null argument");
    const hkp_solve_options opts = options ? *options : hkp_solve_options_default();
    hkp::SolveOptions o;
    o.tau = opts.tau;
    o.seed = opts.seed;
    o.exhaustive_fallback = opts.exhaustive_fallback != 0;
    HKP_REQUIRE_ARG(o.tau >= 1.0, "tau must be >= 1");
    const auto report = hkp::solve_hkp(gens->value, oracle->value, o);
    *out_json = dup_string(hkp::io::to_json(report).dump());
    if (!report.result) return fail(HKP_ERR_INTRACTABLE, "instance is Intractable and no fallback was requested");
    return HKP_OK;
  });
}

hkp_status hkp_verify(const char* suite, char** out_json) {
  return guarded([&] {
    HKP_REQUIRE_ARG(suite && out_json, "null argument");
    const auto results = hkp::run_verify(suite);
    const auto j = hkp::to_json(results);
    *out_json = dup_string(j.dump());
    if (!j["passed"].get<bool>()) return fail(HKP_ERR_VERIFY_FAILED, "at least one verification check failed");
    return HKP_OK;
  });
}

hkp_status hkp_experiment(const char* config_json, char** out_json) {
  return guarded([&] {
    HKP_REQUIRE_ARG(config_json && out_json, "null argument");
    const auto j = hkp::io::parse_text(config_json);
    if (!j.is_object()) throw hkp::InvalidInput("experiment config must be a JSON object");
    hkp::ExperimentConfig c;
    try {
      c.name = j.at("name").get<std::string>();
      c.n = j.value("n", c.n);
      c.trials = j.value("trials", c.trials);
      c.seed = j.value("seed", c.seed);
      c.threads = j.value("threads", c.threads);
      c.probes = j.value("probes", c.probes);
      for (const auto& s : j.value("strategies", std::vector<std::string>{}))
        c.strategies.push_back(hkp::parse_probe_strategy(s));
    } catch (const nlohmann::json::exception& e) {
      throw hkp::InvalidInput(std::string("experiment config: ") + e.what());
    }
    HKP_REQUIRE_ARG(c.trials >= 1, "trials must be >= 1");
    HKP_REQUIRE_ARG(c.threads >= 1, "threads must be >= 1");
    *out_json = dup_string(hkp::run_experiment(c).dump());
    return HKP_OK;
  });
}

hkp_status hkp_json_rows_to_csv(const char* json, char** out_csv) {
  return guarded([&] {
    HKP_REQUIRE_ARG(json && out_csv, "null argument");
    const auto j = hkp::io::parse_text(json);
    const auto& rows = j.is_object() && j.contains("rows") ? j.at("rows") : j;
    HKP_REQUIRE_ARG(rows.is_array(), "expected an array of rows");
    *out_csv = dup_string(hkp::io::rows_to_csv(rows));
    return HKP_OK;
  });
}

}  // extern "C"
