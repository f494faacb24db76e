/*
 * C interface to liblambdap: exact construction of the maximal p-core
 * p'-partition of a prime p, the bounds on its size, and brute-force oracles
 * for small p.
 *
 * Conventions
 *   - Every fallible call returns lp_status. On failure a description is
 *     available from lp_last_error() on the same thread until the next call.
 *   - Handles are opaque and immutable once created; a handle may be read
 *     from several threads at once.
 *   - Strings are written into caller buffers. When `needed` is non-NULL it
 *     receives the length including the terminating NUL; a NULL or short
 *     buffer yields LP_ERR_BUFFER_TOO_SMALL with `needed` still filled in.
 *   - Integers that may exceed 64 bits (sizes, bound values, margins) are
 *     exchanged as decimal strings.
 */
#ifndef LAMBDAP_H
#define LAMBDAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LAMBDAP_BUILDING_LIBRARY)
#    define LP_API __declspec(dllexport)
#  else
#    define LP_API __declspec(dllimport)
#  endif
#else
#  define LP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lp_status {
    LP_OK = 0,
    LP_ERR_INVALID_ARGUMENT = 1, /* precondition violated (non-prime p, bad range, ...) */
    LP_ERR_LIMIT_EXCEEDED = 2,   /* input beyond a configured work cap */
    LP_ERR_BUFFER_TOO_SMALL = 3,
    LP_ERR_VERIFICATION = 4,     /* a mathematical check failed */
    LP_ERR_INTERNAL = 5
} lp_status;

LP_API const char* lp_version(void);
LP_API const char* lp_last_error(void);
LP_API const char* lp_status_name(lp_status status);

/* ---- number theory -------------------------------------------------- */

LP_API int lp_is_prime(uint64_t n);

/* ---- Lambda_p profile ----------------------------------------------- */

typedef struct lp_profile lp_profile;

typedef enum lp_sequence {
    LP_SEQ_M = 0,        /* row multiplicities m_1..m_{p-1} */
    LP_SEQ_B = 1,        /* bead multiplicities b_1..b_{p-1} */
    LP_SEQ_D = 2,        /* d_i = p - m_i */
    LP_SEQ_C_PREFIX = 3  /* c_i = d_1 + ... + d_i */
} lp_sequence;

typedef enum lp_residue_class { LP_CLASS_S = 0, LP_CLASS_T = 1, LP_CLASS_NONE = 2 } lp_residue_class;

typedef struct lp_minimal_pair {
    int64_t i;
    int64_t x;
    int64_t y;
    int64_t x_max;
    int64_t y_max;
    lp_residue_class cls;
    int64_t r; /* witness, 0 when cls == LP_CLASS_NONE */
    int64_t s;
} lp_minimal_pair;

/* p must be an odd prime below 2^31. */
LP_API lp_status lp_profile_create(uint64_t p, lp_profile** out);
LP_API void lp_profile_destroy(lp_profile* profile);

LP_API uint64_t lp_profile_prime(const lp_profile* profile);
LP_API int64_t lp_profile_c(const lp_profile* profile);
/* p - 1, the length of every sequence. */
LP_API size_t lp_profile_length(const lp_profile* profile);
/* Copies min(len, p - 1) entries. */
LP_API lp_status lp_profile_sequence(const lp_profile* profile, lp_sequence which, int64_t* out, size_t len);
/* |Lambda_p| in decimal. */
LP_API lp_status lp_profile_size(const lp_profile* profile, char* buf, size_t len, size_t* needed);
/* 24 |Lambda_p| / p^6 truncated to `digits` decimal places. */
LP_API lp_status lp_profile_ratio(const lp_profile* profile, unsigned digits, char* buf, size_t len, size_t* needed);
/* 1 <= i <= p - 2 */
LP_API lp_status lp_profile_minimal_pair(const lp_profile* profile, int64_t i, lp_minimal_pair* out);

/* Parts of Lambda_p in decreasing order. `count` receives the number of
 * parts; LP_ERR_LIMIT_EXCEEDED when it would exceed max_parts (0 selects the
 * library default). */
LP_API lp_status lp_profile_parts(const lp_profile* profile, uint64_t max_parts, int64_t* out, size_t len,
                                  size_t* count);

/* Walk vertex sequence starting at 0; LP_ERR_LIMIT_EXCEEDED beyond max_vertices. */
LP_API lp_status lp_profile_walk(const lp_profile* profile, uint64_t max_vertices, int64_t* out, size_t len,
                                 size_t* count);

/* Minimal pair from the reference O(p) search, for cross-checks. */
LP_API lp_status lp_minimal_pair_direct(uint64_t p, int64_t i, lp_minimal_pair* out);

/* ---- structural checks on a profile --------------------------------- */

typedef enum lp_profile_check {
    LP_CHECK_SYMMETRY = 0,  /* pair and row-multiplicity symmetry */
    LP_CHECK_IDENTITY = 1,  /* prefix-sum identities and the sum of b_i */
    LP_CHECK_STRUCTURE = 2, /* walk replay plus pair congruences */
    LP_CHECK_LEMMAS = 3     /* per-residue S/T inequalities (+ direct search for p <= 2000) */
} lp_profile_check;

typedef struct lp_check_outcome {
    int holds;            /* 1 when no asserted property failed */
    uint64_t violations;
    uint64_t notes;       /* report-level observations */
} lp_check_outcome;

/* `message` (optional) receives the first violation, or "" when none. */
LP_API lp_status lp_profile_check_run(const lp_profile* profile, lp_profile_check which, lp_check_outcome* out,
                                      char* message, size_t len);

typedef enum lp_walk_violation {
    LP_WALK_OK = 0,
    LP_WALK_BAD_LENGTH = 1,
    LP_WALK_RETURNS_TO_ZERO = 2,
    LP_WALK_MISSED_BOUNDARY = 3,
    LP_WALK_WRONG_FINAL_RESIDUE = 4
} lp_walk_violation;

typedef struct lp_walk_report {
    int ok;
    lp_walk_violation violation;
    int64_t label;
    int64_t step;
    int64_t residue_after_first_block;
    int64_t final_residue;
} lp_walk_report;

/* Replays an arbitrary label-count sequence m (length p - 1) on G_p. */
LP_API lp_status lp_validate_walk(uint64_t p, const int64_t* m, size_t len, lp_walk_report* out);

/* ---- bounds --------------------------------------------------------- */

typedef struct lp_bounds lp_bounds;

typedef enum lp_bound_check {
    LP_BOUND_THEOREM_LOWER = 0,
    LP_BOUND_THEOREM_UPPER = 1,
    LP_BOUND_EQ1_UPPER = 2,
    LP_BOUND_MCSPIRIT_ONO_UPPER = 3,
    LP_BOUND_CONSTRUCTION_COMPARISON = 4,
    LP_BOUND_C_UPPER = 5,
    LP_BOUND_C_LOWER = 6,
    LP_BOUND_C18 = 7
} lp_bound_check;
#define LP_BOUND_CHECK_COUNT 8

typedef enum lp_applicability {
    LP_ASSERTED = 0,
    LP_OUTSIDE_STATED_RANGE = 1,
    LP_NOT_APPLICABLE = 2,
    LP_REPORT_ONLY = 3
} lp_applicability;

typedef struct lp_verdict {
    int holds;
    int violated; /* holds == 0 and applicability == LP_ASSERTED */
    lp_applicability applicability;
} lp_verdict;

LP_API lp_status lp_bounds_create(const lp_profile* profile, lp_bounds** out);
LP_API void lp_bounds_destroy(lp_bounds* bounds);
LP_API const char* lp_bound_check_name(lp_bound_check which);
LP_API lp_status lp_bounds_verdict(const lp_bounds* bounds, lp_bound_check which, lp_verdict* out);
/* Exact integer slack of the cleared inequality, decimal. */
LP_API lp_status lp_bounds_margin(const lp_bounds* bounds, lp_bound_check which, char* buf, size_t len,
                                  size_t* needed);

typedef enum lp_closed_form {
    LP_FORM_MCSPIRIT_ONO = 0, /* floor of the value */
    LP_FORM_MCDOWELL_UPPER = 1,
    LP_FORM_CONSTRUCTION = 2  /* exact fraction "num/den" */
} lp_closed_form;

LP_API lp_status lp_closed_form_value(lp_closed_form which, uint64_t p, char* buf, size_t len, size_t* needed);

/* Theorem interval verdicts for an arbitrary size given in decimal. */
LP_API lp_status lp_theorem_interval(uint64_t p, const char* size_decimal, lp_verdict* lower, lp_verdict* upper);

/* ---- totient lemma -------------------------------------------------- */

typedef struct lp_totient_result {
    int holds;
    uint32_t n_max;
    uint32_t first_violation; /* 0 when holds */
    uint32_t min_slack_at;
} lp_totient_result;

/* `slack` (optional) receives the minimal slack, an exact fraction when known. */
LP_API lp_status lp_totient_check(uint32_t n_max, lp_totient_result* out, char* slack, size_t len);

/* ---- oracles -------------------------------------------------------- */

typedef struct lp_walk_summary {
    int64_t length;
    uint64_t optimal_count;
    uint64_t visited;   /* walks enumerated (exhaustive oracle only) */
    int unique;
} lp_walk_summary;

/* Exhaustive maximal-size walk (p <= 9). m receives p - 1 counts; size in decimal. */
LP_API lp_status lp_oracle_max_size_walk(uint64_t p, int64_t* m, size_t m_len, char* size, size_t size_len,
                                         lp_walk_summary* out);
/* Longest-walk dynamic program (p <= 500). */
LP_API lp_status lp_oracle_longest_walk(uint64_t p, int64_t* m, size_t m_len, lp_walk_summary* out);
/* Maximal p-core p'-partition of size <= size_cap by exhaustive search. */
LP_API lp_status lp_oracle_partition_search(uint64_t p, int64_t size_cap, int64_t* parts, size_t len, size_t* count,
                                            uint64_t* searched);

#ifdef __cplusplus
}
#endif

#endif /* LAMBDAP_H */
