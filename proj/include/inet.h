/* C API for the interaction-net runtime: opaque handles + error codes.
 * All functions return INET_OK on success; out-parameters are only
 * written on success. Strings returned through char** are heap-allocated
 * and must be released with inet_string_free(). */
#ifndef INET_H
#define INET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum inet_status {
    INET_OK = 0,
    INET_ERR_INVALID_ARGUMENT = 1, /* bad configuration or input */
    INET_ERR_TYPE = 2,             /* ill-typed net construction or pairing */
    INET_ERR_STUCK = 3,            /* net normalized to a non-value */
    INET_ERR_MISSING_RULE = 4,     /* no dispatch arm for an active pair */
    INET_ERR_RESULT_MISMATCH = 5,  /* benchmark result disagrees with the oracle */
    INET_ERR_IO = 6,               /* file could not be written */
    INET_ERR_INTERNAL = 7
} inet_status;

const char* inet_status_message(inet_status status);

/* ------------------------------------------------------------------ */
/* Runtime handles                                                    */

typedef struct inet_runtime_s inet_runtime;

/* workers >= 1: pool-backed parallel engine with that many workers.
 * workers == 0: pool-backed engine with the default size (INET_POOL_SIZE
 * environment variable when set, else hardware concurrency). */
inet_status inet_runtime_create(int workers, inet_runtime** out);

/* Single-threaded deterministic reference engine. */
inet_status inet_runtime_create_sequential(inet_runtime** out);

void inet_runtime_destroy(inet_runtime* rt);

/* Sequential cutoff for the Fibonacci system (default 20). */
inet_status inet_runtime_set_cutoff(inet_runtime* rt, int cutoff);

/* ------------------------------------------------------------------ */
/* Evaluation                                                         */

/* elapsed_ms may be NULL; it covers reduction only, not net building. */
inet_status inet_eval_fib(inet_runtime* rt, long long n, long long* result, double* elapsed_ms);

typedef enum inet_sort_algo { INET_SORT_QUICKSORT = 0, INET_SORT_MERGESORT = 1 } inet_sort_algo;

/* Sorts xs[0..len) ascending into out[0..len) (out may alias xs). */
inet_status inet_eval_sort(inet_runtime* rt, inet_sort_algo algo, const long long* xs, size_t len,
                           long long* out, double* elapsed_ms);

inet_status inet_eval_and(inet_runtime* rt, int x, int y, int* result);
inet_status inet_eval_is_even(inet_runtime* rt, long long n, int* result);

/* Per-rule firing counters accumulated by this runtime so far, as
 * "label TAB count" lines sorted by label. */
inet_status inet_stats_text(inet_runtime* rt, char** out);
inet_status inet_stats_reset(inet_runtime* rt);

/* ------------------------------------------------------------------ */
/* Tooling                                                            */

/* Runs the named system once on the sequential reference engine and
 * returns its per-rule firing counts as "label TAB count" lines. */
inet_status inet_run_stats(const char* system, long long n, int len, unsigned long long seed,
                           int cutoff, char** out);

/* Deterministic pre-reduction DOT snapshot of the named system's net.
 * system is one of "fib", "qsort", "msort"; n is the Fibonacci input,
 * len/seed describe the generated list input. */
inet_status inet_net_dot(const char* system, long long n, int len, unsigned long long seed,
                         char** out);

/* ------------------------------------------------------------------ */
/* Benchmark harness                                                  */

typedef struct inet_bench_config {
    const char* system;       /* "fib" | "qsort" | "msort" */
    long long fib_n;          /* fib input */
    int list_len;             /* sort input length */
    unsigned long long seed;  /* sort input PRNG seed */
    const int* pool_sizes;    /* distinct, >= 1 */
    int pool_count;
    int repetitions;          /* >= 1; one extra warm-up run is discarded */
    int cutoff;
} inet_bench_config;

/* Runs the sweep; every timed run is verified against the reference
 * oracle first. csv_path may be NULL (no file written); report_text may
 * be NULL (no summary returned). */
inet_status inet_bench_run(const inet_bench_config* cfg, const char* csv_path, char** report_text);

void inet_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* INET_H */
