/* Copyright 2026 The Choice Toolkit Authors
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

/* C interface of the choice toolkit: parse and print formulas of
 * propositional logic with ordered disjunction, evaluate the QCL, PQCL and
 * GCL degree semantics, enumerate preferred models, and build and solve the
 * two evaluation games.
 *
 * Conventions:
 *   - every function returns a choice_status; results go to out-parameters;
 *   - on failure choice_last_error() describes the problem (thread-local);
 *   - strings returned through char** are heap-allocated and must be
 *     released with choice_string_free();
 *   - interpretations are comma-separated variable lists ("" is empty);
 *   - degrees print as decimal integers, or "inf" for the unsigned
 *     non-satisfaction degree;
 *   - game nodes are preorder indices, the root is node 0.
 */

#ifndef CHOICE_H
#define CHOICE_H

#ifdef __cplusplus
extern "C" {
#endif

#define CHOICE_API_VERSION 1

typedef enum choice_status {
  CHOICE_OK = 0,
  CHOICE_ERR_PARSE = 1,   /* malformed formula text */
  CHOICE_ERR_INVALID = 2, /* bad argument or contract violation */
  CHOICE_ERR_CAP = 3,     /* enumeration cap exceeded */
  CHOICE_ERR_INTERNAL = 4
} choice_status;

typedef enum choice_semantics {
  CHOICE_SEM_QCL = 0,
  CHOICE_SEM_PQCL = 1,
  CHOICE_SEM_GCL = 2
} choice_semantics;

typedef enum choice_variant {
  CHOICE_GAME_G = 0, /* preference-erasing negation, unsigned payoffs */
  CHOICE_GAME_NG = 1 /* role-switch negation, signed payoffs */
} choice_variant;

typedef struct choice_formula choice_formula;
typedef struct choice_game choice_game;

int choice_api_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* choice_last_error(void);

void choice_string_free(char* s);

/* ----- formulas ---------------------------------------------------------- */

choice_status choice_formula_parse(const char* text, choice_formula** out);
void choice_formula_free(choice_formula* f);

/* Canonical text with minimal parentheses. */
choice_status choice_formula_print(const choice_formula* f, char** out);
/* Sorted comma-separated variable list. */
choice_status choice_formula_vars(const choice_formula* f, char** out_csv);

/* Degree of the formula under one of the three semantics. */
choice_status choice_eval(const choice_formula* f, choice_semantics sem,
                          const char* interp_csv, char** out_degree);

/* Number of interpretations over the formula's variables (2^n), refused
 * above the variable cap. */
choice_status choice_interp_count(const choice_formula* f, int var_cap,
                                  unsigned long long* out);
/* The index-th interpretation in binary-counting order, as CSV. */
choice_status choice_interp_at(const choice_formula* f,
                               unsigned long long index, char** out_csv);

/* Best degree and all attaining interpretations. The first line of the
 * result holds the degree ("unsatisfiable" when there is no model), each
 * further line one interpretation in braces. Supported semantics: QCL and
 * GCL. */
choice_status choice_preferred(const choice_formula* f, choice_semantics sem,
                               int var_cap, char** out_text);

/* Preferred-model entailment of a classical conclusion; *out is 1 or 0. */
choice_status choice_entails(const choice_formula* premise,
                             const choice_formula* conclusion, int var_cap,
                             int* out);

/* ----- games ------------------------------------------------------------- */

choice_status choice_game_build(const choice_formula* f, choice_variant v,
                                choice_game** out);
void choice_game_free(choice_game* g);

choice_status choice_game_value(const choice_game* g, const char* interp_csv,
                                char** out_degree);
/* Graphviz text; payoffs are annotated when interp_csv is non-NULL. */
choice_status choice_game_dot(const choice_game* g, const char* interp_csv,
                              char** out);
/* Optimal line of play, one move per line, ending at the outcome. */
choice_status choice_game_strategy(const choice_game* g,
                                   const char* interp_csv, char** out);

choice_status choice_game_node_count(const choice_game* g, int* out);
/* kind: 'I' or 'Y' for internal nodes, 'L' for leaves. */
choice_status choice_game_node_info(const choice_game* g, int node,
                                    char* out_kind, char** out_caption,
                                    int* out_child_count);
choice_status choice_game_node_child(const choice_game* g, int node, int k,
                                     int* out_child);
/* Payoff of a leaf and whether it is winning (from My viewpoint). */
choice_status choice_game_leaf_payoff(const choice_game* g, int leaf,
                                      const char* interp_csv,
                                      char** out_degree, int* out_winning);
/* Index (into the node's child list) of the optimal move for the player
 * whose turn it is at the node. */
choice_status choice_game_optimal_child(const choice_game* g,
                                        const char* interp_csv, int node,
                                        int* out_index);

/* ----- property checks --------------------------------------------------- */

/* Runs the invariant suite over a seeded random corpus. The report is a
 * deterministic multi-line text; *out_all_passed is 1 when every property
 * holds. */
choice_status choice_check_run(unsigned long long seed, int count,
                               int max_connectives, int max_vars,
                               char** out_report, int* out_all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHOICE_H */
