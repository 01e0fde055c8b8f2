/* lisq -- longest-increasing-subsequence distributions, log-concavity
 * certification, lattice-path injections, and Tracy-Widom numerics.
 *
 * C interface to the shared library.  All counts are exact integers
 * returned as decimal strings; handles are opaque and freed with the
 * matching *_free call.  Every function returns a lisq_status.
 */
#ifndef LISQ_H
#define LISQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lisq_status {
    LISQ_OK = 0,
    LISQ_EINVAL = 1,   /* bad argument (parity, unknown tag, range) */
    LISQ_ELIMIT = 2,   /* above a documented brute-force bound */
    LISQ_ERANGE = 3,   /* query outside a tabulated range / tail guard */
    LISQ_EINTERNAL = 4 /* internal consistency failure */
} lisq_status;

const char* lisq_status_message(lisq_status s);

/* ---- count sequences ---------------------------------------------------- */

/* stat: "ell" | "inv"; family: "all" | "hook" | "2row" | "ecol" | "dhook" |
 * "d2row" | "skm".  jobs <= 1 runs single threaded. */
typedef struct lisq_seq lisq_seq;
lisq_status lisq_seq_compute(const char* stat, const char* family, int n, int jobs,
                             lisq_seq** out);
void lisq_seq_free(lisq_seq* seq);

int lisq_seq_n(const lisq_seq* seq);
/* Decimal string for the count at ell = k (1-based); caller frees with
 * lisq_string_free.  NULL on range error. */
char* lisq_seq_value(const lisq_seq* seq, int k);
void lisq_string_free(char* s);

/* ---- log-concavity checks ----------------------------------------------- */

/* ok=1/0; fail_index is the first failing k when ok=0. */
lisq_status lisq_seq_log_concave(const lisq_seq* seq, int* ok, int* fail_index);

/* verdict: 0 Certified, 1 FailedAt, 2 Inconclusive. */
lisq_status lisq_seq_certify_infinite(const lisq_seq* seq, int max_iterations, int* verdict,
                                      int* iteration, int* index);

/* Coefficientwise f_{n-1} f_{n+1} >= f_n^2 for the generating polynomials of
 * the (stat, family) sequences at sizes n-1, n, n+1. */
lisq_status lisq_qlogconvex_triple(const char* stat, const char* family, int n, int jobs,
                                   int* ok, int* fail_power);

/* Exact Sturm decision for the generating polynomial at size n; also reports
 * the number of distinct real roots. */
lisq_status lisq_real_rooted(const char* stat, const char* family, int n, int jobs,
                             int* rooted, int* real_roots);

/* ---- injection verification --------------------------------------------- */

typedef struct lisq_inject_report {
    long long domain_size;
    long long image_size;
    long long collisions;
    long long codomain_violations;
} lisq_inject_report;

/* family: "hook" | "2row" | "lift" (lifted permutation injection over hook
 * classes).  Exhaustive over the full domain at (n, k). */
lisq_status lisq_inject_verify(const char* family, int n, int k, lisq_inject_report* out);

/* ---- Tracy-Widom tabulation ---------------------------------------------- */

typedef struct lisq_tw lisq_tw;
/* Integrates Painleve II backward from the Airy seed at x0 down to x_min. */
lisq_status lisq_tw_build(double x0, double x_min, double tol, lisq_tw** out);
void lisq_tw_free(lisq_tw* t);

lisq_status lisq_tw_cdf(const lisq_tw* t, double x, double* out);
lisq_status lisq_tw_density(const lisq_tw* t, double x, double* out);
/* LISQ_ERANGE when the right-tail guard makes the ratio meaningless. */
lisq_status lisq_tw_log_density_dd(const lisq_tw* t, double x, double* out);
lisq_status lisq_tw_moments(const lisq_tw* t, double* mean, double* variance);
lisq_status lisq_tw_max_residual(const lisq_tw* t, double lo, double hi, double* out);
/* Largest (log density)'' over the grid [lo, hi]; negative means log concave
 * throughout. */
lisq_status lisq_tw_scan_max(const lisq_tw* t, double lo, double hi, double* max_value,
                             double* arg_max);
lisq_status lisq_tw_range(const lisq_tw* t, double* x_lo, double* x_hi, int* truncated);
lisq_status lisq_tw_write_csv(const lisq_tw* t, const char* path, double dx);

#ifdef __cplusplus
}
#endif

#endif /* LISQ_H */
