// Copyright 2026 The Hypershare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERSHARE_HYPERSHARE_H_
#define HYPERSHARE_HYPERSHARE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HS_API __declspec(dllexport)
#else
#define HS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; 2..9 double as the command-line exit codes. */
typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_USAGE = 1,
  HS_ERR_FORMAT = 2,
  HS_ERR_NOT_QUALIFIED = 3,
  HS_ERR_COVER_FAILURE = 4,
  HS_ERR_PARTITION_FAILURE = 5,
  HS_ERR_ENUMERATION_TOO_LARGE = 6,
  HS_ERR_FIELD_TOO_SMALL = 7,
  HS_ERR_TARGET_SELECTION = 8,
  HS_ERR_INFEASIBLE_COUNT = 9,
  HS_ERR_AUDIT_FINDINGS = 10,
  HS_ERR_INTERNAL = 11
} hs_status;

typedef enum hs_mode {
  HS_MODE_AUTO = 0,
  HS_MODE_SPARSE = 1,
  HS_MODE_DENSE = 2
} hs_mode;

typedef struct hs_hypergraph hs_hypergraph;
typedef struct hs_scheme hs_scheme;
typedef struct hs_shares hs_shares;

/* Message of the most recent failure on this thread ("" after success). */
HS_API const char* hs_last_error(void);
HS_API const char* hs_status_name(hs_status status);
HS_API void hs_string_free(char* s);

/* Hypergraphs ---------------------------------------------------------- */

/* mode must be HS_MODE_SPARSE or HS_MODE_DENSE. */
HS_API hs_status hs_hypergraph_generate(int k, uint32_t n, double beta, hs_mode mode,
                                        uint64_t seed, hs_hypergraph** out);
/* Reads either the k-uniform or the k-partite text format. */
HS_API hs_status hs_hypergraph_load(const char* path, hs_hypergraph** out);
HS_API hs_status hs_hypergraph_save(const hs_hypergraph* h, const char* path);
/* partite is set to 1 for k-partite input. Any out pointer may be NULL. */
HS_API hs_status hs_hypergraph_info(const hs_hypergraph* h, int* k, uint32_t* n,
                                    uint64_t* edges, int* partite);
HS_API void hs_hypergraph_free(hs_hypergraph* h);

/* Schemes -------------------------------------------------------------- */

typedef struct hs_build_options {
  hs_mode mode;       /* AUTO classifies by edge count */
  double beta;        /* density parameter, 0 <= beta < 1 */
  uint64_t seed;
  uint64_t modulus;   /* 0 selects the smallest admissible prime */
  int force_partition;
} hs_build_options;

HS_API void hs_build_options_init(hs_build_options* options);

HS_API hs_status hs_scheme_build(const hs_hypergraph* h, const hs_build_options* options,
                                 hs_scheme** out);
/* A loaded scheme carries no access structure and only a row-count report. */
HS_API hs_status hs_scheme_load(const char* path, hs_scheme** out);
HS_API hs_status hs_scheme_save(const hs_scheme* s, const char* path);
HS_API hs_status hs_scheme_save_report(const hs_scheme* s, const char* path);
/* Caller frees *text with hs_string_free. */
HS_API hs_status hs_scheme_report(const hs_scheme* s, char** text);
HS_API hs_status hs_scheme_dimensions(const hs_scheme* s, uint64_t* modulus,
                                      uint64_t* rows, uint64_t* cols,
                                      uint32_t* participants);
HS_API hs_status hs_scheme_accepts(const hs_scheme* s, const uint32_t* subset,
                                   size_t count, int* accepted);
HS_API void hs_scheme_free(hs_scheme* s);

/* Shares --------------------------------------------------------------- */

HS_API hs_status hs_share(const hs_scheme* s, uint64_t secret, uint64_t seed,
                          hs_shares** out);
HS_API hs_status hs_shares_load(const char* path, hs_shares** out);
HS_API hs_status hs_shares_save(const hs_shares* shares, const char* path);
HS_API hs_status hs_reconstruct(const hs_scheme* s, const hs_shares* shares,
                                const uint32_t* subset, size_t count, uint64_t* secret);
HS_API void hs_shares_free(hs_shares* shares);

/* Audit ---------------------------------------------------------------- */

/* Exhaustive audit of every subset up to max_size against `structure`, or
   against the scheme's own structure when structure is NULL. Returns the
   plain-text report and the failure/violation counts. */
HS_API hs_status hs_audit(const hs_scheme* s, const hs_hypergraph* structure,
                          size_t max_size, char** text, uint64_t* failures,
                          uint64_t* violations);

#ifdef __cplusplus
}
#endif

#endif  /* HYPERSHARE_HYPERSHARE_H_ */
