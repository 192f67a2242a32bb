// Copyright 2026 The rbc Authors
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

#ifndef RBC_RBC_H_
#define RBC_RBC_H_

/*
 * C interface to the reversible circuit rewriting library.
 *
 * Every object is an opaque handle released with its *_free function.
 * Functions return an rbc_status; on failure rbc_last_error() describes the
 * problem for the calling thread. Strings returned through char** are
 * heap-allocated and released with rbc_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef RBC_BUILDING_LIBRARY
#    define RBC_API __declspec(dllexport)
#  else
#    define RBC_API __declspec(dllimport)
#  endif
#else
#  define RBC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbc_status {
  RBC_OK = 0,
  RBC_ERR_PARSE = 1,
  RBC_ERR_OUT_OF_RANGE = 2,
  RBC_ERR_WIDTH_MISMATCH = 3,
  RBC_ERR_WIDTH_TOO_LARGE = 4,
  RBC_ERR_INPUT_LENGTH = 5,
  RBC_ERR_STEP_LIMIT = 6,
  RBC_ERR_STATE_LIMIT = 7,
  RBC_ERR_INVALID_RULE = 8,
  RBC_ERR_STALE_MATCH = 9,
  RBC_ERR_INVALID_ARGUMENT = 10,
  RBC_ERR_IO = 11,
  RBC_ERR_INTERNAL = 12
} rbc_status;

typedef enum rbc_gate_kind {
  RBC_GATE_SWAP = 0,
  RBC_GATE_NOT = 1,
  RBC_GATE_T2 = 2,
  RBC_GATE_T3 = 3
} rbc_gate_kind;

typedef struct rbc_diagram rbc_diagram;
typedef struct rbc_rules rbc_rules;
typedef struct rbc_trace rbc_trace;
typedef struct rbc_diagram_list rbc_diagram_list;

RBC_API const char* rbc_last_error(void);
/* 1-based position of the last parse error on this thread, 0 if none. */
RBC_API size_t rbc_last_error_line(void);
RBC_API void rbc_string_free(char* s);

/* Diagrams */
RBC_API rbc_status rbc_diagram_new(size_t width, rbc_diagram** out);
RBC_API rbc_status rbc_diagram_push_gate(rbc_diagram* d, rbc_gate_kind kind, size_t offset);
RBC_API rbc_status rbc_diagram_parse(const char* text, rbc_diagram** out);
RBC_API rbc_status rbc_diagram_load(const char* path, rbc_diagram** out);
RBC_API void rbc_diagram_free(rbc_diagram* d);
RBC_API size_t rbc_diagram_width(const rbc_diagram* d);
RBC_API size_t rbc_diagram_gate_count(const rbc_diagram* d);
RBC_API rbc_status rbc_diagram_gate(const rbc_diagram* d, size_t index, rbc_gate_kind* kind,
                                    size_t* offset);
RBC_API rbc_status rbc_diagram_canonicalize(const rbc_diagram* d, rbc_diagram** out);
RBC_API int rbc_diagram_equivalent(const rbc_diagram* a, const rbc_diagram* b);
RBC_API rbc_status rbc_diagram_to_text(const rbc_diagram* d, char** out);

/* Semantics. max_width 0 selects the default cap of 12 wires. */
RBC_API rbc_status rbc_truth_table_text(const rbc_diagram* d, size_t max_width, char** out);
RBC_API rbc_status rbc_truth_tables_equal(const rbc_diagram* a, const rbc_diagram* b,
                                          size_t max_width, int* equal);
RBC_API rbc_status rbc_eval_text(const rbc_diagram* d, const char* bits, char** out);

/* Measure: phi(d) as "out[i] <- in[j] ++ \"w\"" lines followed by "rank <n>". */
RBC_API rbc_status rbc_measure_text(const rbc_diagram* d, char** out);
/* Decimal epsilon rank of phi(d). */
RBC_API rbc_status rbc_measure_rank(const rbc_diagram* d, char** out);

/* Rule catalogs */
RBC_API rbc_status rbc_rules_builtin(rbc_rules** out);
/* Parses and validates a catalog; RBC_ERR_INVALID_RULE names the bad rule. */
RBC_API rbc_status rbc_rules_parse(const char* text, rbc_rules** out);
RBC_API rbc_status rbc_rules_load(const char* path, rbc_rules** out);
RBC_API void rbc_rules_free(rbc_rules* r);
RBC_API size_t rbc_rules_count(const rbc_rules* r);
RBC_API rbc_status rbc_verify_rules(const rbc_rules* r, int* all_strict, char** report);

/* Normalization. step_limit 0 selects the default safety cap. */
RBC_API rbc_status rbc_normalize(const rbc_diagram* d, const rbc_rules* r, uint64_t step_limit,
                                 rbc_diagram** normal_form, rbc_trace** trace);
RBC_API void rbc_trace_free(rbc_trace* t);
RBC_API size_t rbc_trace_step_count(const rbc_trace* t);
RBC_API rbc_status rbc_trace_text(const rbc_trace* t, char** out);
/* max_width 0 selects the default truth-table cap. */
RBC_API rbc_status rbc_trace_verify(const rbc_trace* t, size_t max_width, int* ok, char** report);

/* Normal-form enumeration */
RBC_API rbc_status rbc_normal_forms(const rbc_diagram* d, const rbc_rules* r, size_t max_states,
                                    rbc_diagram_list** out);
RBC_API void rbc_diagram_list_free(rbc_diagram_list* l);
RBC_API size_t rbc_diagram_list_size(const rbc_diagram_list* l);
/* Borrowed pointer, valid until the list is freed. */
RBC_API const rbc_diagram* rbc_diagram_list_at(const rbc_diagram_list* l, size_t index);

#ifdef __cplusplus
}
#endif

#endif  // RBC_RBC_H_
