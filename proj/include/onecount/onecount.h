/* onecount — integer complexity tables, shortest-expression witnesses,
 * deterministic prime-set reductions and power digit statistics.
 *
 * C API over opaque handles. Every fallible call returns onec_status and
 * writes results through out-parameters; handles are freed with the matching
 * *_free function. All handles are immutable once created and safe to share
 * across threads.
 */
#ifndef ONECOUNT_H
#define ONECOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ONEC_API __declspec(dllexport)
#else
#define ONEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum onec_status {
  ONEC_OK = 0,
  ONEC_ERR_INVALID_ARGUMENT = 1,
  ONEC_ERR_OUT_OF_RANGE = 2,
  ONEC_ERR_NOT_FOUND = 3,
  ONEC_ERR_OVERFLOW = 4,
  ONEC_ERR_NONPOSITIVE_SUBTERM = 5,
  ONEC_ERR_PARSE = 6,
  ONEC_ERR_IO = 7,
  ONEC_ERR_FORMAT = 8,
  ONEC_ERR_CHECKSUM = 9,
  ONEC_ERR_LIMIT_TOO_LARGE = 10,
  ONEC_ERR_WITNESS_NOT_FOUND = 11,
  ONEC_ERR_OUT_OF_BUDGET = 12,
  ONEC_ERR_NOMEM = 13,
  ONEC_ERR_UNKNOWN = 14
} onec_status;

typedef enum onec_basis {
  ONEC_BASIS_PLUS_TIMES = 0,
  ONEC_BASIS_PLUS_TIMES_MINUS = 1
} onec_basis;

typedef struct onec_table onec_table;
typedef struct onec_expr onec_expr;
typedef struct onec_prime_set onec_prime_set;
typedef struct onec_stream onec_stream;

ONEC_API const char* onec_version(void);
ONEC_API const char* onec_status_str(onec_status status);

/* Frees strings returned through char** out-parameters. */
ONEC_API void onec_string_free(char* s);

/* ---- expressions -------------------------------------------------------- */

/* Grammar: expr := "1" | "(" expr op expr ")", op := "+" | "*" | "-". */
ONEC_API onec_status onec_expr_parse(const char* text, onec_expr** out);
ONEC_API void onec_expr_free(onec_expr* e);
ONEC_API onec_status onec_expr_evaluate(const onec_expr* e, uint64_t* value);
ONEC_API uint64_t onec_expr_ones(const onec_expr* e);
ONEC_API int onec_expr_valid(const onec_expr* e, onec_basis basis);
ONEC_API onec_status onec_expr_render(const onec_expr* e, char** text);

/* ---- complexity tables --------------------------------------------------- */

ONEC_API onec_status onec_table_build(uint64_t limit, onec_basis basis, onec_table** out);
ONEC_API void onec_table_free(onec_table* t);
ONEC_API onec_status onec_table_save(const onec_table* t, const char* path);
ONEC_API onec_status onec_table_load(const char* path, onec_table** out);
ONEC_API uint64_t onec_table_limit(const onec_table* t);
ONEC_API onec_basis onec_table_basis(const onec_table* t);

ONEC_API onec_status onec_table_complexity(const onec_table* t, uint64_t n, uint32_t* ones);
/* ones/log3(n); requires n > 1. */
ONEC_API onec_status onec_table_log_complexity(const onec_table* t, uint64_t n, double* value);
ONEC_API onec_status onec_table_shortest_expr(const onec_table* t, uint64_t n, onec_expr** out);

/* Largest value with complexity exactly k by the closed form; 0 for k = 0. */
ONEC_API uint64_t onec_selfridge_e(uint32_t k);
/* j-th largest m with complexity(m) <= k. */
ONEC_API onec_status onec_table_e_kth(const onec_table* t, uint32_t k, uint32_t j, uint64_t* out);
/* Smallest m with complexity(m) == k. */
ONEC_API onec_status onec_table_e_min(const onec_table* t, uint32_t k, uint64_t* out);

typedef struct onec_champion {
  uint64_t n;
  uint32_t ones;
  double log_complexity;
} onec_champion;

/* records must hold `top` entries; *count receives how many were written. */
ONEC_API onec_status onec_table_champions(const onec_table* t, uint64_t bound, uint32_t top,
                                          onec_champion* records, uint32_t* count);

/* Compression exponents of p within the table; *count <= cap entries written. */
ONEC_API onec_status onec_table_compression_points(const onec_table* t, uint64_t p,
                                                   uint32_t n_max, uint32_t* exponents,
                                                   uint32_t cap, uint32_t* count);

typedef struct onec_power_row {
  uint32_t exponent;
  uint32_t ones;
  double log_complexity;
  double running_min;
} onec_power_row;

/* Rows for base^1.. within the table; *subadditive reports the pairwise
 * ||k^(a+b)|| <= ||k^a|| + ||k^b|| check. */
ONEC_API onec_status onec_table_power_limit_check(const onec_table* t, uint64_t base,
                                                  onec_power_row* rows, uint32_t cap,
                                                  uint32_t* count, int* subadditive);

/* ---- prime-set reductions ------------------------------------------------ */

ONEC_API onec_status onec_prime_set_create(const uint64_t* primes, uint32_t count,
                                           onec_prime_set** out);
ONEC_API void onec_prime_set_free(onec_prime_set* ps);
ONEC_API uint64_t onec_prime_set_q(const onec_prime_set* ps);
ONEC_API uint32_t onec_prime_set_size(const onec_prime_set* ps);
ONEC_API onec_status onec_prime_set_member_ones(const onec_prime_set* ps, uint64_t p,
                                                uint32_t* ones);

/* One-count of the reduction's expression for n; expr_out may be NULL when
 * only the count is needed. */
ONEC_API onec_status onec_prime_set_complexity(const onec_prime_set* ps, uint64_t n,
                                               uint32_t* ones, onec_expr** expr_out);

/* d_p(n) = ||n||_P - ||p_star|| * log_{p_star}(n). */
ONEC_API onec_status onec_prime_set_defect(const onec_prime_set* ps, uint64_t n,
                                           uint64_t p_star, double* defect);

typedef void (*onec_scan_cb)(void* ctx, uint64_t n, uint32_t ones, double log_complexity);

ONEC_API onec_status onec_prime_set_scan(const onec_prime_set* ps, uint64_t from, uint64_t to,
                                         onec_scan_cb cb, void* ctx);

typedef struct onec_bound_report {
  double hypothesis_bound;
  double weak_bound;
  uint64_t hypothesis_violations;
  uint64_t weak_violations;
  double max_log_complexity;
  uint64_t max_n;
} onec_bound_report;

ONEC_API onec_status onec_prime_set_check_upper_bound(const onec_prime_set* ps, uint64_t from,
                                                      uint64_t to, onec_bound_report* report);

typedef struct onec_partly_row {
  uint64_t p;
  double left;
  double right;
  int pass;
} onec_partly_row;

/* One row per member other than the minimum; *count <= cap entries written. */
ONEC_API onec_status onec_prime_set_check_partly(const onec_prime_set* ps, onec_partly_row* rows,
                                                 uint32_t cap, uint32_t* count);

typedef void (*onec_spectrum_cb)(void* ctx, uint32_t a, uint32_t b, const char* n_decimal,
                                 uint64_t ones, double log_complexity);

ONEC_API onec_status onec_prime_set_power_pair_spectrum(const onec_prime_set* ps, uint64_t p,
                                                        uint64_t q, uint32_t a_max,
                                                        uint32_t b_max, uint64_t verify_limit,
                                                        onec_spectrum_cb cb, void* ctx,
                                                        uint64_t* verified,
                                                        uint64_t* mismatches);

/* n_decimal receives the full decimal value (free with onec_string_free);
 * *traced is nonzero and *traced_ones valid when n fits in 63 bits. */
ONEC_API onec_status onec_prime_set_dense_point(const onec_prime_set* ps, uint32_t m, uint32_t l,
                                                char** n_decimal, uint64_t* n0, uint64_t* k,
                                                uint64_t* predicted_ones, int* traced,
                                                uint64_t* traced_ones);

/* ---- power digit streams ------------------------------------------------- */

ONEC_API onec_status onec_stream_create(uint64_t p, uint32_t q, uint64_t max_digits,
                                        onec_stream** out);
ONEC_API void onec_stream_free(onec_stream* s);
ONEC_API onec_status onec_stream_advance(onec_stream* s);
ONEC_API uint64_t onec_stream_exponent(const onec_stream* s);
ONEC_API uint64_t onec_stream_digit_count(const onec_stream* s);
/* Little-endian digit buffer, valid until the next advance. */
ONEC_API const uint8_t* onec_stream_digits(const onec_stream* s);
ONEC_API uint64_t onec_stream_digit_sum(const onec_stream* s);
/* has_* are set to 0 and the value to 0.0 where the statistic is undefined. */
ONEC_API onec_status onec_stream_stats(const onec_stream* s, int* has_s3, double* s3,
                                       int* has_sigma, double* sigma);

ONEC_API onec_status onec_horner_expr(uint64_t n, uint32_t q, onec_expr** out);

ONEC_API onec_status onec_histogram(const double* values, uint64_t count, double lo, double hi,
                                    double width, uint64_t* bins, uint64_t bin_cap,
                                    uint64_t* bin_count, uint64_t* underflow,
                                    uint64_t* overflow);

/* ---- factorization ------------------------------------------------------- */

/* Ascending prime factors with multiplicity; n = 1 yields *count = 0. */
ONEC_API onec_status onec_factorize(uint64_t n, uint64_t* factors, uint32_t cap,
                                    uint32_t* count);
ONEC_API int onec_is_prime(uint64_t n);

#ifdef __cplusplus
}
#endif

#endif /* ONECOUNT_H */
