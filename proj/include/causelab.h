/*
 * Copyright 2026 The causelab Authors
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

/*
 * causelab C API.
 *
 * All objects are opaque handles created by *_from_json or *_builtin and
 * released with the matching *_free. Every fallible call returns a
 * causelab_status; on failure, causelab_last_error(ctx) holds a JSON object
 * {"error": "<kind>", "message": "..."} until the next call on that context.
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with causelab_string_free. Rationals are "num/den".
 *
 * A context is not thread-safe; use one per thread. Handles are immutable
 * and may be shared between contexts.
 */

#ifndef CAUSELAB_H
#define CAUSELAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(CAUSELAB_BUILDING_LIBRARY)
#define CAUSELAB_API __attribute__((visibility("default")))
#else
#define CAUSELAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum causelab_status {
    CAUSELAB_OK = 0,
    CAUSELAB_ERR_INVALID_ARGUMENT = 1,
    CAUSELAB_ERR_PARSE = 2,
    CAUSELAB_ERR_INVALID_SCENARIO = 3,
    CAUSELAB_ERR_SCENARIO_MISMATCH = 4,
    CAUSELAB_ERR_INVALID_TABLE = 5,
    CAUSELAB_ERR_NOT_CANONICALIZABLE = 6,
    CAUSELAB_ERR_INVALID_MIXTURE = 7,
    CAUSELAB_ERR_SEARCH_SPACE_TOO_LARGE = 8,
    CAUSELAB_ERR_CAP_EXCEEDED = 9,
    CAUSELAB_ERR_INFEASIBLE = 10,
    CAUSELAB_ERR_UNBOUNDED = 11,
    CAUSELAB_ERR_NON_DIAGONAL = 12,
    CAUSELAB_ERR_DIMENSION_MISMATCH = 13,
    CAUSELAB_ERR_INTERNAL = 14
} causelab_status;

typedef enum causelab_bound_set {
    CAUSELAB_BOUND_CAUSAL = 0,
    CAUSELAB_BOUND_DC = 1,
    CAUSELAB_BOUND_PC = 2,
    CAUSELAB_BOUND_PC_CANONICAL = 3
} causelab_bound_set;

typedef struct causelab_context causelab_context;
typedef struct causelab_quasiprocess causelab_quasiprocess;
typedef struct causelab_correlation causelab_correlation;
typedef struct causelab_game causelab_game;
typedef struct causelab_process_matrix causelab_process_matrix;
typedef struct causelab_instruments causelab_instruments;

CAUSELAB_API const char *causelab_version(void);
CAUSELAB_API const char *causelab_status_string(causelab_status status);
CAUSELAB_API void causelab_string_free(char *s);

/* Context: search caps and worker count. Defaults: enumeration cap 2^32,
 * hull vertex cap 100000, one thread. */
CAUSELAB_API causelab_status causelab_context_new(causelab_context **out);
CAUSELAB_API void causelab_context_free(causelab_context *ctx);
CAUSELAB_API causelab_status causelab_context_set_threads(causelab_context *ctx, unsigned threads);
CAUSELAB_API causelab_status causelab_context_set_enumeration_cap(causelab_context *ctx, uint64_t cap);
CAUSELAB_API causelab_status causelab_context_set_hull_cap(causelab_context *ctx, uint64_t cap);
/* Never NULL; "" when the last call succeeded. */
CAUSELAB_API const char *causelab_last_error(const causelab_context *ctx);

/* Quasi-processes p(i|o). Built-in names: "bfw", "grandfather". */
CAUSELAB_API causelab_status causelab_quasiprocess_from_json(causelab_context *ctx, const char *json,
                                                             causelab_quasiprocess **out);
CAUSELAB_API causelab_status causelab_quasiprocess_builtin(causelab_context *ctx, const char *name,
                                                           causelab_quasiprocess **out);
CAUSELAB_API causelab_status causelab_quasiprocess_to_json(causelab_context *ctx, const causelab_quasiprocess *qp,
                                                           char **out);
CAUSELAB_API void causelab_quasiprocess_free(causelab_quasiprocess *qp);

/* Correlations p(x|a). Built-in names: "gynin-perfect", "gyni-perfect", "pr-box". */
CAUSELAB_API causelab_status causelab_correlation_from_json(causelab_context *ctx, const char *json,
                                                            causelab_correlation **out);
CAUSELAB_API causelab_status causelab_correlation_builtin(causelab_context *ctx, const char *name,
                                                          causelab_correlation **out);
CAUSELAB_API causelab_status causelab_correlation_to_json(causelab_context *ctx, const causelab_correlation *corr,
                                                          char **out);
CAUSELAB_API void causelab_correlation_free(causelab_correlation *corr);

/* Games. Built-in names: "gynin", "gyni", "ocb", "chsh". */
CAUSELAB_API causelab_status causelab_game_from_json(causelab_context *ctx, const char *json, causelab_game **out);
CAUSELAB_API causelab_status causelab_game_builtin(causelab_context *ctx, const char *name, causelab_game **out);
CAUSELAB_API causelab_status causelab_game_to_json(causelab_context *ctx, const causelab_game *game, char **out);
CAUSELAB_API void causelab_game_free(causelab_game *game);

/* Process matrices. Built-in names: "ocb", "bfw". */
CAUSELAB_API causelab_status causelab_process_matrix_from_json(causelab_context *ctx, const char *json,
                                                               causelab_process_matrix **out);
CAUSELAB_API causelab_status causelab_process_matrix_builtin(causelab_context *ctx, const char *name,
                                                             causelab_process_matrix **out);
CAUSELAB_API causelab_status causelab_process_matrix_to_json(causelab_context *ctx,
                                                             const causelab_process_matrix *pm, char **out);
CAUSELAB_API void causelab_process_matrix_free(causelab_process_matrix *pm);

/* Instruments. Built-in name: "ocb". causelab_instruments_canonical builds the
 * diagonal copy-in/copy-out instruments matching a process matrix's dims. */
CAUSELAB_API causelab_status causelab_instruments_from_json(causelab_context *ctx, const char *json,
                                                            causelab_instruments **out);
CAUSELAB_API causelab_status causelab_instruments_builtin(causelab_context *ctx, const char *name,
                                                          causelab_instruments **out);
CAUSELAB_API causelab_status causelab_instruments_canonical(causelab_context *ctx, const causelab_process_matrix *pm,
                                                            causelab_instruments **out);
CAUSELAB_API causelab_status causelab_instruments_to_json(causelab_context *ctx, const causelab_instruments *ins,
                                                          char **out);
CAUSELAB_API void causelab_instruments_free(causelab_instruments *ins);

/* Logical consistency. *consistent is 1 or 0; report_json (optional) holds
 * the verdict with the violating output choice and its mass. */
CAUSELAB_API causelab_status causelab_check_consistency(causelab_context *ctx, const causelab_quasiprocess *qp,
                                                        int *consistent, char **report_json);

/* Process functions on `parties` parties with uniform alphabet `alphabet`.
 * Report: {"candidates", "count", "process_functions": [...]}; pass
 * include_list = 0 to omit the list. */
CAUSELAB_API causelab_status causelab_enumerate_process_functions(causelab_context *ctx, unsigned parties,
                                                                  unsigned alphabet, int reduced, int include_list,
                                                                  char **report_json);

/* Bound on a game. value_out (optional) receives "num/den". */
CAUSELAB_API causelab_status causelab_bound(causelab_context *ctx, const causelab_game *game, causelab_bound_set set,
                                            char **value_out, char **report_json);

/* Exact score of a correlation, "num/den". */
CAUSELAB_API causelab_status causelab_score(causelab_context *ctx, const causelab_game *game,
                                            const causelab_correlation *corr, char **value_out);

/* qC/PC/DC membership with certificates. `witnesses` may be NULL when n = 0.
 * *replayed is 1 when every certificate re-checks exactly. */
CAUSELAB_API causelab_status causelab_classify(causelab_context *ctx, const causelab_correlation *corr,
                                               const causelab_game *const *witnesses, size_t n, int *replayed,
                                               char **report_json);

/* Universal quasi-process realization of a correlation. */
CAUSELAB_API causelab_status causelab_realize(causelab_context *ctx, const causelab_correlation *corr,
                                              char **report_json);

/* Process-matrix and instrument validity; *valid is 1 when both hold. */
CAUSELAB_API causelab_status causelab_pm_validate(causelab_context *ctx, const causelab_process_matrix *pm,
                                                  const causelab_instruments *ins, int *valid, char **report_json);

/* Born-rule correlation. If `game` is non-NULL, *score_out receives its score. */
CAUSELAB_API causelab_status causelab_pm_evaluate(causelab_context *ctx, const causelab_process_matrix *pm,
                                                  const causelab_instruments *ins, const causelab_game *game,
                                                  double *score_out, char **report_json);

/* Exact classical table of a diagonal process matrix. */
CAUSELAB_API causelab_status causelab_pm_to_classical(causelab_context *ctx, const causelab_process_matrix *pm,
                                                      causelab_quasiprocess **out);

#ifdef __cplusplus
}
#endif

#endif
