/* transversal_lab: independent transversals of bipartite correspondence
 * covers — validation, sufficiency checks, exact and randomized solvers,
 * extremal generators, and exact probability analysis.
 *
 * C API over an opaque instance handle. Every function that produces output
 * returns it as a heap-allocated JSON string the caller releases with
 * tvl_string_free(). Functions returning tvl_status report errors through
 * the status code plus, where a char** is given, a JSON error document.
 */

#ifndef TRANSVERSAL_LAB_H
#define TRANSVERSAL_LAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TVL_API __declspec(dllexport)
#else
#define TVL_API __attribute__((visibility("default")))
#endif

typedef struct tvl_instance tvl_instance; /* opaque validated cover instance */

typedef enum tvl_status {
    TVL_OK = 0,
    TVL_ERR_PARSE = 1,      /* malformed instance JSON / unresolved ids */
    TVL_ERR_VALIDATION = 2, /* cover axiom violated (report says which) */
    TVL_ERR_INVALID_ARG = 3,
    TVL_ERR_SIZE_GUARD = 4, /* refused without force: past desk scale */
    TVL_ERR_INTERNAL = 5
} tvl_status;

typedef enum tvl_solve_status {
    TVL_SOLVE_FOUND = 0,
    TVL_SOLVE_INFEASIBLE = 1,
    TVL_SOLVE_GAVE_UP = 2
} tvl_solve_status;

TVL_API const char* tvl_version(void);
TVL_API void tvl_string_free(char* s);

/* Parse + validate an instance document. On success *out is a handle the
 * caller frees with tvl_instance_free and *report_json (optional) holds the
 * passing validation report. On failure *out is NULL and *report_json holds
 * the parse error or the first violated axiom with witnesses. */
TVL_API tvl_status tvl_instance_load(const char* json_text, tvl_instance** out,
                                     char** report_json);
TVL_API void tvl_instance_free(tvl_instance* inst);

/* Canonical serialization (dense ids, sorted keys). */
TVL_API char* tvl_instance_to_json(const tvl_instance* inst);

/* {"delta_a": .., "delta_b": .., "d_a": .., "d_b": .., "k_a": .., "k_b": ..} */
TVL_API char* tvl_degree_profile(const tvl_instance* inst);

/* Sufficiency checks on explicit parameters; report echoes inputs, both
 * compared sides in log domain, and the verdict. */
TVL_API tvl_status tvl_check_cond1(int64_t k_a, int64_t k_b, int64_t d_a, int64_t d_b,
                                   char** report_json);
TVL_API tvl_status tvl_check_cond2(int64_t k_a, int64_t k_b, int64_t d_a, int64_t d_b,
                                   char** report_json);
TVL_API tvl_status tvl_check_cond3(int64_t k_a, int64_t k_b, int64_t delta_a,
                                   int64_t delta_b, char** report_json);
TVL_API tvl_status tvl_check_local(int64_t d_a, int64_t d_b, double epsilon, int64_t k_a,
                                   int64_t k_b, char** report_json);
TVL_API tvl_status tvl_check_prop8(int64_t k, char** report_json);
/* All applicable checks evaluated on the instance's degree profile. */
TVL_API tvl_status tvl_check_instance(const tvl_instance* inst, char** report_json);

/* algo is "exact", "mt", or "hyper" ("hyper-random" for the randomized
 * hypergraph mode). budget: node limit for exact search (0 = default 1e8);
 * round_cap: resampling limit (0 = default 1000*|A_G|). *solve_status gets
 * the verdict; *outcome_json the full outcome with stats and, when found,
 * the transversal (choice per dense base id). */
TVL_API tvl_status tvl_solve(const tvl_instance* inst, const char* algo, uint64_t seed,
                             uint64_t budget, uint64_t round_cap,
                             tvl_solve_status* solve_status, char** outcome_json);

/* Construction spec, e.g. {"prop":"6","k":2} or
 * {"prop":"random","n_a":4,"n_b":4,"part_a":2,"part_b":2,"base":"complete",
 *  "density":1.0,"seed":7}; prop "4" takes k, "7" takes d, "8" takes k and
 * a_size. force=1 overrides size guards. *instance_json gets the instance
 * document; for prop 8 *extra_json (optional) gets the greedy trace. */
TVL_API tvl_status tvl_construct(const char* spec_json, int force, char** instance_json,
                                 char** extra_json);

/* check is "blockprob" (needs vertex = A-side base id and cover_vertex),
 * "correlation" (needs vertex), or "deps" (needs vertex and mode
 * "cond2"/"cond3" in mode_or_null). Exact rationals are reported as
 * numerator/denominator strings. */
TVL_API tvl_status tvl_analyze(const tvl_instance* inst, const char* check, int64_t vertex,
                               int64_t cover_vertex, const char* mode_or_null,
                               char** report_json);

/* Runs the ten-check verification battery; returns the JSON summary with
 * per-criterion pass/fail and timings. Pass criterion = 0 for the full
 * suite. */
TVL_API tvl_status tvl_bench(int criterion, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRANSVERSAL_LAB_H */
