// Copyright 2026 The zxbicat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the zxbicat engine.
 *
 * Diagrams are opaque handles owned by the caller and released with
 * zx_diagram_free. Structured results (matrices, matches, derivations,
 * reports) are returned as NUL-terminated JSON strings released with
 * zx_string_free. Every function returns ZX_OK or an error status; details
 * of the most recent error on the calling thread are available through
 * zx_last_error_message and zx_last_error_json. */

#ifndef ZXBICAT_ZXBICAT_H
#define ZXBICAT_ZXBICAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define ZX_API __attribute__((visibility("default")))
#else
#define ZX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zx_status {
  ZX_OK = 0,
  ZX_ERR_INVALID_ARGUMENT = 1,
  ZX_ERR_INVALID_GRAPH = 2,
  ZX_ERR_ILLEGAL_EDGE = 3,
  ZX_ERR_INVALID_MORPHISM = 4,
  ZX_ERR_LABEL_CLASH = 5,
  ZX_ERR_DANGLING_CONDITION = 6,
  ZX_ERR_BOUNDARY_VIOLATION = 7,
  ZX_ERR_ARITY_MISMATCH = 8,
  ZX_ERR_ARITY_UNSUPPORTED = 9,
  ZX_ERR_NOT_OPEN_NODE = 10,
  ZX_ERR_MIDDLE_MISMATCH = 11,
  ZX_ERR_SYNTAX = 12,
  ZX_ERR_NON_WIRE_OPEN_NODE = 13,
  ZX_ERR_SHAPE_MISMATCH = 14,
  ZX_ERR_UNKNOWN_RULE = 15,
  ZX_ERR_RULE_INAPPLICABLE = 16,
  ZX_ERR_INVALID_JSON = 17,
  ZX_ERR_NOT_FOUND = 18,
  ZX_ERR_IO = 19,
  ZX_ERR_INTERNAL = 20
} zx_status;

typedef struct zx_diagram zx_diagram;

typedef struct zx_budget {
  size_t max_steps;
  size_t max_states;
  size_t max_nodes; /* 0: twice the larger diagram plus four */
} zx_budget;

ZX_API const char* zx_version(void);
ZX_API const char* zx_status_name(zx_status status);

/* Message of the last failure on this thread; empty after success. */
ZX_API const char* zx_last_error_message(void);
/* {"error":{"code","message","line"?,"column"?}} for the last failure. */
ZX_API const char* zx_last_error_json(void);

ZX_API void zx_string_free(char* s);

/* Construction and I/O. */
ZX_API zx_status zx_diagram_parse_term(const char* term, zx_diagram** out);
ZX_API zx_status zx_diagram_from_json(const char* json, zx_diagram** out);
ZX_API zx_status zx_diagram_to_json(const zx_diagram* d, char** out);
ZX_API zx_status zx_diagram_content_id(const zx_diagram* d, char** out);
ZX_API zx_status zx_diagram_arity(const zx_diagram* d, size_t* inputs, size_t* outputs);
ZX_API zx_status zx_diagram_node_count(const zx_diagram* d, size_t* nodes);
ZX_API zx_status zx_diagram_equal(const zx_diagram* a, const zx_diagram* b, int* equal);
ZX_API void zx_diagram_free(zx_diagram* d);

/* 1-cell operations. */
ZX_API zx_status zx_diagram_compose(const zx_diagram* first, const zx_diagram* second, zx_diagram** out);
ZX_API zx_status zx_diagram_tensor(const zx_diagram* a, const zx_diagram* b, zx_diagram** out);
ZX_API zx_status zx_diagram_dagger(const zx_diagram* d, zx_diagram** out);

/* {"rows","cols","data":[[re,im],...]} */
ZX_API zx_status zx_eval(const zx_diagram* d, char** json_out);

/* Rules. */
ZX_API zx_status zx_rules_json(char** json_out);
/* Representative instance of a variant as {name,L,R,K,kl,kr}. */
ZX_API zx_status zx_rule_json(const char* variant, char** json_out);
/* {"matches":[...]} */
ZX_API zx_status zx_matches(const zx_diagram* d, const char* rule, char** json_out);
/* Applies match `index` of `rule`; the witness 2-cell goes to witness_json
 * when that pointer is non-null. Stale indices give
 * ZX_ERR_RULE_INAPPLICABLE. */
ZX_API zx_status zx_rewrite(const zx_diagram* d, const char* rule, size_t index, zx_diagram** result,
                            char** witness_json);

/* Proof search. *found is 1 for a derivation and 0 when the budget ran
 * out; json_out holds the result either way. */
ZX_API zx_status zx_prove(const zx_diagram* lhs, const zx_diagram* rhs, const zx_budget* budget, int* found,
                          char** json_out);
ZX_API zx_status zx_normalize(const zx_diagram* d, size_t max_steps, zx_diagram** out);

/* Checks. `rule` may be NULL for every variant. *ok is 1 iff all pass. */
ZX_API zx_status zx_soundness(const char* rule, double tolerance, int* ok, char** json_out);
/* law: interchange, pushout_lemma, companions, snake, monoidal_unit_cells,
 * groupoid or all. */
ZX_API zx_status zx_check_laws(const char* law, uint64_t seed, size_t cases, int* ok, char** json_out);

/* HTTP service; blocks until the process is stopped. snapshot_dir may be
 * NULL. */
ZX_API zx_status zx_serve(const char* host, int port, const char* snapshot_dir);

#ifdef __cplusplus
}
#endif

#endif /* ZXBICAT_ZXBICAT_H */
