/*
 * devlab — shortest and longest developments of marked lambda terms.
 *
 * C interface to the devlab core. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Functions that
 * can fail return a devlab_status; on failure devlab_last_error() describes
 * the problem for the calling thread (syntax errors also carry a byte span).
 *
 * Development lengths routinely outgrow 64 bits, so every length or count
 * crosses this interface as a decimal string. Returned char* are heap
 * allocations to release with devlab_string_free unless documented as
 * borrowed.
 */
#ifndef DEVLAB_H_
#define DEVLAB_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum devlab_status {
  DEVLAB_OK = 0,
  DEVLAB_ERR_SYNTAX = 1,         /* input text failed to parse */
  DEVLAB_ERR_INVALID_PATH = 2,   /* path missing or not the required node kind */
  DEVLAB_ERR_ALREADY_NORMAL = 3, /* stepping a term with no redex */
  DEVLAB_ERR_LIMIT = 4,          /* configured search limit exceeded */
  DEVLAB_ERR_BAD_ARGUMENT = 5,   /* invalid parameter (NULL, bad name, ...) */
  DEVLAB_ERR_INTERNAL = 6        /* invariant violation inside the library */
} devlab_status;

typedef struct devlab_term devlab_term;
typedef struct devlab_trace devlab_trace;
typedef struct devlab_paths devlab_paths;
typedef struct devlab_report devlab_report;

/* Message of the calling thread's most recent failure; borrowed, valid until
 * the next failing call on the same thread. Empty string when no error. */
const char* devlab_last_error(void);

/* Byte span of the most recent syntax error. Returns 1 and fills the offsets
 * when the last error carried a span, 0 otherwise. */
int devlab_last_error_span(size_t* start, size_t* end);

void devlab_string_free(char* s);

/* --- terms ------------------------------------------------------------- */

/* Grammar: '\x. body' abstraction, juxtaposition application, '(\*x. body)
 * arg' marked redex; 'λ' may replace '\'. */
devlab_status devlab_parse(const char* text, devlab_term** out);

/* Machine form: ["var",x] | ["lam",x,t] | ["app",f,a] | ["red",x,b,a]. */
devlab_status devlab_term_from_json(const char* json, devlab_term** out);

void devlab_term_free(devlab_term* t);

char* devlab_print(const devlab_term* t);
char* devlab_term_to_json(const devlab_term* t);
uint64_t devlab_term_size(const devlab_term* t);
int devlab_term_is_normal(const devlab_term* t);
int devlab_term_alpha_eq(const devlab_term* a, const devlab_term* b);

/* Subterm addressed by a path string ("root" or dotted selectors from
 * "body", "fun", "arg", e.g. "body.fun.arg"). */
devlab_status devlab_subterm(const devlab_term* t, const char* path, devlab_term** out);

/* --- measures ------------------------------------------------------------
 * Shortest/longest complete development length of the term, as decimal
 * strings. devlab_copies gives the argument-copy multiplicity of a named
 * variable: minimal (maximal=0) or maximal (maximal=1). */
char* devlab_shortest_length(const devlab_term* t);
char* devlab_longest_length(const devlab_term* t);
devlab_status devlab_copies(const devlab_term* t, const char* var, int maximal, char** out);

/* --- strategies ---------------------------------------------------------
 * Complete development traces driven by the one-step strategies; shortest
 * iterates the minimal-duplication step, longest the maximal one. A normal
 * form yields an empty trace. */
devlab_status devlab_trace_shortest(const devlab_term* t, devlab_trace** out);
devlab_status devlab_trace_longest(const devlab_term* t, devlab_trace** out);
size_t devlab_trace_steps(const devlab_trace* tr);
char* devlab_trace_step_path(const devlab_trace* tr, size_t i);
devlab_term* devlab_trace_step_term(const devlab_trace* tr, size_t i);
void devlab_trace_free(devlab_trace* tr);

/* --- redexes and essentiality ------------------------------------------ */

devlab_status devlab_redexes(const devlab_term* t, devlab_paths** out);

/* Positions every complete development is forced to contract. Their number
 * always equals the shortest development length. */
devlab_status devlab_essential_set(const devlab_term* t, devlab_paths** out);

size_t devlab_paths_count(const devlab_paths* ps);
char* devlab_paths_get(const devlab_paths* ps, size_t i);
void devlab_paths_free(devlab_paths* ps);

devlab_status devlab_is_essential(const devlab_term* t, const char* path, int* out);

/* --- brute-force oracle ------------------------------------------------- */

typedef struct devlab_dev_stats {
  int complete;    /* search finished within state_limit */
  uint64_t states; /* distinct terms visited (up to alpha) */
  char* shortest;  /* decimal, NULL when incomplete */
  char* longest;   /* decimal, NULL when incomplete */
} devlab_dev_stats;

/* Exhaustive search of the development graph. state_limit 0 selects the
 * built-in default (200000 states). */
devlab_status devlab_oracle_stats(const devlab_term* t, uint64_t state_limit,
                                  devlab_dev_stats* out);
void devlab_dev_stats_clear(devlab_dev_stats* s);

/* Definitional essentiality by residual-tracking search; DEVLAB_ERR_LIMIT if
 * the term is too rich for the limit. */
devlab_status devlab_oracle_essential(const devlab_term* t, const char* path,
                                      uint64_t state_limit, int* out);

/* --- generator and property checks -------------------------------------- */

typedef struct devlab_gen_params {
  uint64_t max_size;    /* node budget, >= 1 */
  uint64_t max_redexes; /* marked-redex budget */
  uint64_t seed;        /* equal seeds give equal terms */
  double p_var;         /* relative constructor weights, all > 0 */
  double p_lam;
  double p_app;
  double p_red;
} devlab_gen_params;

void devlab_gen_params_init(devlab_gen_params* p);
devlab_status devlab_generate(const devlab_gen_params* p, devlab_term** out);

/* Generates `count` terms and runs the full invariant suite on each; the
 * report tallies pass/fail/skip per property. state_limit 0 = default. */
devlab_status devlab_run_checks(const devlab_gen_params* p, uint64_t count,
                                uint64_t state_limit, devlab_report** out);
size_t devlab_report_rows(const devlab_report* r);
const char* devlab_report_row_name(const devlab_report* r, size_t i); /* borrowed */
uint64_t devlab_report_row_pass(const devlab_report* r, size_t i);
uint64_t devlab_report_row_fail(const devlab_report* r, size_t i);
uint64_t devlab_report_row_skip(const devlab_report* r, size_t i);
uint64_t devlab_report_terms(const devlab_report* r);
uint64_t devlab_report_failures(const devlab_report* r);
/* First failing term and the property it broke; borrowed, NULL when clean. */
const char* devlab_report_counterexample(const devlab_report* r);
const char* devlab_report_failed_property(const devlab_report* r);
void devlab_report_free(devlab_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DEVLAB_H_ */
