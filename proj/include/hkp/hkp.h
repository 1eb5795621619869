/*
 * Copyright 2026 The HKP Workbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the Hidden Kernel Problem workbench.
 *
 * Objects are opaque handles released with their *_free function. Calls
 * return an hkp_status; on failure hkp_last_error() describes the problem
 * for the calling thread. Strings handed out through char** parameters are
 * owned by the caller and released with hkp_string_free().
 */
#ifndef HKP_HKP_H
#define HKP_HKP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HKP_BUILDING_LIBRARY)
#    define HKP_API __declspec(dllexport)
#  else
#    define HKP_API __declspec(dllimport)
#  endif
#else
#  define HKP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hkp_status {
  HKP_OK = 0,
  HKP_ERR_INVALID_ARGUMENT = 1,
  HKP_ERR_PARSE = 2,
  HKP_ERR_CAPACITY = 3,
  HKP_ERR_NOT_CONGRUENCE = 4,
  HKP_ERR_UNCLASSIFIED = 5,
  /* Solve finished with an Intractable verdict; the report is still filled. */
  HKP_ERR_INTRACTABLE = 6,
  HKP_ERR_NOT_FOUND = 7,
  /* Verification ran and at least one check failed; the report is filled. */
  HKP_ERR_VERIFY_FAILED = 8,
  HKP_ERR_INTERNAL = 9
} hkp_status;

typedef struct hkp_gens hkp_gens;
typedef struct hkp_congruence hkp_congruence;
typedef struct hkp_oracle hkp_oracle;

HKP_API const char* hkp_version(void);
HKP_API const char* hkp_status_name(hkp_status status);
/* Message of the last failed call on this thread, "" if none. */
HKP_API const char* hkp_last_error(void);
HKP_API void hkp_string_free(char* s);

/* Generators: an ASCII clone id (BOT, MEET, JOIN, U, MPT0, MPT1, AP, AP0, A,
 * DM, TOP) or JSON, either an array of {"arity","table"} or {"gens":[...]}. */
HKP_API hkp_status hkp_gens_from_clone_id(const char* id, hkp_gens** out);
HKP_API hkp_status hkp_gens_from_json(const char* json, hkp_gens** out);
HKP_API hkp_status hkp_gens_to_json(const hkp_gens* gens, char** out_json);
HKP_API void hkp_gens_free(hkp_gens* gens);

/* {"case","witnesses","primary_witness"}; HKP_ERR_UNCLASSIFIED if no case applies. */
HKP_API hkp_status hkp_classify(const hkp_gens* gens, char** out_json);

HKP_API hkp_status hkp_congruence_from_json(const char* json, hkp_congruence** out);
/* spec: random:SEED | identity | total | proj:I | xor:BITS | span:B1,B2 | path to JSON. */
HKP_API hkp_status hkp_congruence_from_spec(const char* spec, const hkp_gens* gens, int n, hkp_congruence** out);
HKP_API hkp_status hkp_congruence_to_json(const hkp_congruence* theta, char** out_json);
HKP_API int hkp_congruence_width(const hkp_congruence* theta);
HKP_API hkp_status hkp_congruence_is_congruence(const hkp_congruence* theta, const hkp_gens* gens, int* out);
HKP_API void hkp_congruence_free(hkp_congruence* theta);

/* {"n","count","congruences":[...]} for n <= 4. */
HKP_API hkp_status hkp_enumerate(const hkp_gens* gens, int n, char** out_json);

HKP_API hkp_status hkp_oracle_create(const hkp_congruence* hidden, const hkp_gens* gens, hkp_oracle** out);
HKP_API int hkp_oracle_input_width(const hkp_oracle* oracle);
HKP_API int hkp_oracle_output_width(const hkp_oracle* oracle);
/* x and the returned codeword are 0/1 strings, coordinate 1 first. */
HKP_API hkp_status hkp_oracle_query(hkp_oracle* oracle, const char* x, char** out_bits);
HKP_API uint64_t hkp_oracle_query_count(const hkp_oracle* oracle);
HKP_API hkp_status hkp_oracle_set_recording(hkp_oracle* oracle, int on);
HKP_API hkp_status hkp_oracle_transcript_csv(const hkp_oracle* oracle, char** out_csv);
HKP_API void hkp_oracle_free(hkp_oracle* oracle);

/* {"distribution","samples","queries"}. */
HKP_API hkp_status hkp_simulate(hkp_oracle* oracle, uint64_t samples, uint64_t seed, char** out_json);

typedef struct hkp_solve_options {
  double tau;
  uint64_t seed;
  int exhaustive_fallback;
} hkp_solve_options;

HKP_API hkp_solve_options hkp_solve_options_default(void);
/* Classifies gens and dispatches. HKP_ERR_INTRACTABLE with a filled report
 * when the instance is Intractable and no fallback was requested. */
HKP_API hkp_status hkp_solve(const hkp_gens* gens, hkp_oracle* oracle, const hkp_solve_options* options,
                             char** out_json);

/* suite: simon-dual | cd-projections | ap-cong | jonsson | hardness | all. */
HKP_API hkp_status hkp_verify(const char* suite, char** out_json);

/* config: {"name","n","trials","seed","threads","probes":[...],"strategies":[...]}. */
HKP_API hkp_status hkp_experiment(const char* config_json, char** out_json);

/* Flat CSV of a JSON array of objects, or of the "rows" member of an object. */
HKP_API hkp_status hkp_json_rows_to_csv(const char* json, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* HKP_HKP_H */
