/*
 * palsieve — C API for the palindrome distribution toolkit.
 *
 * Exact enumeration/counting over base-b palindrome families, square-free
 * counts in arithmetic progressions against the density main term, modular
 * exponential sums (Gauss, quadratic Kloosterman, Kummer) with their
 * structural identities, digit harmonics, large-sieve diagnostics for square
 * moduli, and a registry of executable verification checks.
 *
 * All functions return ps_status; results come back through out-parameters.
 * Opaque handles own their resources and are released with the matching
 * *_free function. Handles are not thread-safe; everything else is
 * re-entrant and safe to call concurrently.
 */

#ifndef PALSIEVE_H
#define PALSIEVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PS_API __declspec(dllexport)
#else
#define PS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
    PS_OK = 0,
    PS_ERR_RANGE = 1,    /* argument outside the supported range/caps */
    PS_ERR_DOMAIN = 2,   /* precondition violated (coprimality, zero, ...) */
    PS_ERR_INVALID = 3,  /* malformed argument (null pointer, bad variant) */
    PS_ERR_IO = 4,       /* file could not be read or written */
    PS_ERR_NUMERIC = 5,  /* iteration failed to converge */
    PS_ERR_BASELINE = 6, /* baseline entry missing or grid mismatch */
    PS_ERR_INTERNAL = 7
} ps_status;

PS_API const char* ps_status_name(ps_status status);

/* Message for the most recent failure on this thread. */
PS_API const char* ps_last_error(void);

PS_API const char* ps_version(void);

typedef struct ps_complex {
    double re, im;
} ps_complex;

/* ------------------------------------------------------------------ */
/* digits                                                              */
/* ------------------------------------------------------------------ */

/* Little-endian digits of n. length < 0 selects the minimal expansion.
 * cap is the capacity of out[]; *out_len receives the digit count. */
PS_API ps_status ps_digits_of(uint64_t n, uint32_t base, int32_t length,
                              uint32_t* out, size_t cap, size_t* out_len);

PS_API ps_status ps_digits_value(const uint32_t* digits, size_t len, uint32_t base,
                                 uint64_t* out);

/* Reverse the first L+1 base-b digits of n (n < b^(L+1)). */
PS_API ps_status ps_reverse_digits(uint64_t n, uint32_t base, uint32_t L, uint64_t* out);

PS_API ps_status ps_is_palindrome(uint64_t n, uint32_t base, int* out);

PS_API ps_status ps_is_quasi_palindrome(uint64_t n, uint32_t base, uint32_t level, int* out);

/* ------------------------------------------------------------------ */
/* arith                                                               */
/* ------------------------------------------------------------------ */

typedef struct ps_factor {
    uint64_t prime;
    uint32_t exponent;
} ps_factor;

PS_API ps_status ps_factorize(uint64_t n, ps_factor* out, size_t cap, size_t* out_count);

typedef struct ps_arith_info {
    uint64_t phi;
    int32_t mobius;
    uint64_t tau;
    uint64_t odd_part;
} ps_arith_info;

PS_API ps_status ps_arith_functions(uint64_t n, ps_arith_info* out);

PS_API ps_status ps_is_squarefree(uint64_t n, int* out);

PS_API ps_status ps_mod_inverse(int64_t a, uint64_t q, uint64_t* out);

PS_API ps_status ps_crt_combine(int64_t a1, uint64_t q1, int64_t a2, uint64_t q2,
                                uint64_t* out);

PS_API ps_status ps_ramanujan_c(uint64_t q, int64_t n, int64_t* out);

/* prod over p | n of (1 - p^-2)^-1 as a reduced fraction. */
PS_API ps_status ps_singular_series(uint64_t n, int64_t* num, uint64_t* den);

/* ------------------------------------------------------------------ */
/* palindrome families                                                 */
/* ------------------------------------------------------------------ */

typedef enum ps_pal_variant {
    PS_PAL_ALL = 0,
    PS_PAL_STAR = 1,    /* coprime to b^3 - b */
    PS_PAL_EVEN_EXP = 2 /* even floor(log_b n) */
} ps_pal_variant;

PS_API ps_status ps_pal_count_upto(uint32_t base, uint64_t x, ps_pal_variant variant,
                                   uint64_t* out);

/* |Pi_b(L)| = (b-1) b^(ceil((L+1)/2)-1). */
PS_API ps_status ps_pal_block_size(uint32_t base, uint32_t L, uint64_t* out);

/* #{l in Pi_b(L) : l = a (q), (l,b)=1}; coprime = 0 drops the filter. */
PS_API ps_status ps_pal_count_in_ap(uint32_t base, uint32_t L, uint64_t q, int64_t a,
                                    int coprime, uint64_t* out);

PS_API ps_status ps_pal_count_divisible(uint32_t base, uint32_t L, uint64_t m,
                                        uint64_t* out);

/* sum over N/2 < n <= N of #{l in Pi_b(L,q,a) : n^2 | l}; needs (q,b)=1. */
PS_API ps_status ps_pal_count_square_pairs(uint32_t base, uint32_t L, uint64_t q,
                                           int64_t a, uint64_t N, uint64_t* out);

/* max_a |Pi_b(L,q,a)| / (|Pi_b(L)|/sqrt(q) + 1). */
PS_API ps_status ps_pal_bs_max_ratio(uint32_t base, uint32_t L, uint64_t q, double* out);

/* Ascending enumerator over Pi_b(L). */
typedef struct ps_pal_iter ps_pal_iter;
PS_API ps_status ps_pal_iter_new(uint32_t base, uint32_t L, ps_pal_iter** out);
PS_API ps_status ps_pal_iter_next(ps_pal_iter* iter, uint64_t* value, int* has_value);
PS_API void ps_pal_iter_free(ps_pal_iter* iter);

/* Stream of (skeleton a, offset m, value l = a + b^level m) covering the
 * level-`level` quasi-palindromes of [b^L, b^(L+1)) with (d_0, b) = 1. */
typedef struct ps_quasi_iter ps_quasi_iter;
PS_API ps_status ps_quasi_iter_new(uint32_t base, uint32_t L, uint32_t level,
                                   ps_quasi_iter** out);
PS_API ps_status ps_quasi_iter_next(ps_quasi_iter* iter, uint64_t* skeleton,
                                    uint64_t* offset, uint64_t* value, int* has_value);
PS_API void ps_quasi_iter_free(ps_quasi_iter* iter);

/* ------------------------------------------------------------------ */
/* exponential sums                                                    */
/* ------------------------------------------------------------------ */

/* G*(a;q): normalized Gauss sum over units. tol receives the accumulation
 * tolerance (1e-9 per summed term); pass NULL to ignore. */
PS_API ps_status ps_gauss_star(int64_t a, uint64_t q, ps_complex* out, double* tol);

/* K2(c,d;q): normalized quadratic Kloosterman sum over units. */
PS_API ps_status ps_k2(int64_t c, int64_t d, uint64_t q, ps_complex* out, double* tol);

/* Ku2(c,d;s): normalized Kummer-type sum over units. */
PS_API ps_status ps_kummer2(int64_t c, int64_t d, uint64_t s, ps_complex* out, double* tol);

PS_API ps_status ps_k2_salie_check(int64_t c, int64_t d, uint64_t q, ps_complex* formula,
                                   ps_complex* definition, int* agree);

PS_API ps_status ps_k2_crt_check(int64_t c, int64_t d, uint64_t q, uint64_t r,
                                 ps_complex* lhs, ps_complex* rhs, int* agree);

PS_API ps_status ps_k2_correlation_check(int64_t c, int64_t d, uint64_t q,
                                         double* sum_form, double* ramanujan_form,
                                         double* bound, int* identity_ok, int* bound_ok);

PS_API ps_status ps_gauss_star_structure(int64_t a, uint64_t q, ps_complex* value,
                                         int* vanish_predicted, int* vanishes, int* bound_ok);

PS_API ps_status ps_twisted_incomplete_k2(double alpha, int64_t a, int64_t c, uint64_t q,
                                          uint64_t N, double C, double eps, double* value,
                                          double* bound1, double* bound2, int* ok);

PS_API ps_status ps_shparlinski_ratio(int64_t c, int64_t d, int32_t k, int32_t l,
                                      uint64_t q, double* out);

/* ------------------------------------------------------------------ */
/* digit harmonics                                                     */
/* ------------------------------------------------------------------ */

PS_API ps_status ps_phi_little(double alpha, uint32_t base, double* out);

PS_API ps_status ps_phi_big(double alpha, uint32_t base, uint32_t N, double* out);

PS_API ps_status ps_phi_moment_exact(uint32_t base, uint32_t N, uint32_t K, uint64_t* out);

PS_API ps_status ps_pal_exp_sum_check(double alpha, uint32_t base, uint32_t N, double* lhs,
                                      double* rhs, int* holds);

PS_API ps_status ps_incomplete_sum_check(double alpha, uint32_t base, uint64_t x,
                                         double* lhs, double* rhs, int* holds);

PS_API ps_status ps_algebraic_shift_check(uint64_t q, uint32_t base, double beta,
                                          uint32_t M, uint32_t N, double delta, double* lhs,
                                          double* rhs, int* agree);

/* ------------------------------------------------------------------ */
/* large sieve with square moduli                                      */
/* ------------------------------------------------------------------ */

PS_API ps_status ps_delta_bound(uint64_t D, uint64_t N, uint64_t q, double eps,
                                double* out);

PS_API ps_status ps_spacing_count(uint64_t D, uint64_t N, uint64_t q, double alpha,
                                  uint64_t* out);

PS_API ps_status ps_spacing_sup(uint64_t D, uint64_t N, uint64_t q, uint64_t* out);

/* gamma holds 2N+1 coefficients for n = -N..N. */
PS_API ps_status ps_ls_quadratic_form(const ps_complex* gamma, size_t count, uint64_t D,
                                      uint64_t q, double* value, double* gamma_l2);

PS_API ps_status ps_phi_moment_square_moduli(uint32_t base, uint32_t N, uint32_t K,
                                             uint64_t q, uint64_t D, double beta,
                                             double* out);

/* ------------------------------------------------------------------ */
/* equidistribution experiment                                         */
/* ------------------------------------------------------------------ */

/* 6 S(b^3-b) S(q) |P*_b(y)| / (pi^2 q); needs (q, b^3-b) = 1. */
PS_API ps_status ps_main_term(uint32_t base, uint64_t q, uint64_t y, double* out);

PS_API ps_status ps_sqfree_pal_count(uint32_t base, uint64_t y, uint64_t q, int64_t a,
                                     uint64_t* out);

/* sup over y <= x, max over units a, of |count - main term|. */
PS_API ps_status ps_discrepancy(uint32_t base, uint64_t x, uint64_t q, double* out);

PS_API ps_status ps_e_of_q(uint32_t base, uint64_t x, uint64_t Q, double* out);

PS_API ps_status ps_e_of_qd(uint32_t base, uint64_t x, uint64_t Q, uint64_t D, double* out);

typedef struct ps_experiment ps_experiment;

typedef struct ps_report_row {
    uint64_t x, q, a, count;
    double main_term, abs_err, rel_err, sigma_hat;
} ps_report_row;

PS_API ps_status ps_experiment_new(uint32_t base, ps_experiment** out);
PS_API ps_status ps_experiment_add_scale(ps_experiment* exp, uint64_t x);
PS_API ps_status ps_experiment_add_modulus(ps_experiment* exp, uint64_t q);
PS_API ps_status ps_experiment_set_threads(ps_experiment* exp, uint32_t threads);
PS_API ps_status ps_experiment_set_seed(ps_experiment* exp, uint64_t seed);
PS_API ps_status ps_experiment_run(ps_experiment* exp);
PS_API ps_status ps_experiment_row_count(const ps_experiment* exp, size_t* out);
PS_API ps_status ps_experiment_row(const ps_experiment* exp, size_t index,
                                   ps_report_row* out);

/* format: 0 = CSV, 1 = JSON, 2 = TSV. Writes up to cap bytes (including the
 * NUL); *needed receives the full size. PS_ERR_RANGE when cap is short. */
PS_API ps_status ps_experiment_render(const ps_experiment* exp, int format, char* buf,
                                      size_t cap, size_t* needed);
PS_API ps_status ps_experiment_write(const ps_experiment* exp, int format,
                                     const char* path);
PS_API void ps_experiment_free(ps_experiment* exp);

/* ------------------------------------------------------------------ */
/* verification checks and baselines                                   */
/* ------------------------------------------------------------------ */

typedef struct ps_verify_options {
    uint64_t qmax, nmax, xmax, lmax, dmax, trials, seed; /* 0 = check default */
    uint32_t threads;                                    /* 0 = single thread */
    const char* baseline_path;                           /* NULL when unused */
} ps_verify_options;

PS_API size_t ps_verify_count(void);
PS_API const char* ps_verify_id(size_t index);
PS_API const char* ps_verify_summary(size_t index);
PS_API int ps_verify_needs_baseline(size_t index);

/* Runs one named check. *passed is 1/0; detail (if non-NULL) receives a
 * human-readable summary truncated to detail_cap. */
PS_API ps_status ps_verify_run(const char* id, const ps_verify_options* options,
                               int* passed, char* detail, size_t detail_cap);

/* Recomputes every frozen constant and writes the baseline JSON to path. */
PS_API ps_status ps_baseline_write(const char* path, uint32_t threads, uint64_t seed);

#ifdef __cplusplus
}
#endif

#endif /* PALSIEVE_H */
