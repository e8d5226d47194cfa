#ifndef DIT_DIT_H
#define DIT_DIT_H

/* C interface to the discrete information theory library.
 *
 * Conventions:
 *   - every function returns a dit_status; DIT_OK means success
 *   - output parameters are written only on success
 *   - strings returned through char** are heap-allocated; release them
 *     with dit_string_free
 *   - dit_last_error_message() describes the most recent failure on the
 *     calling thread; the pointer stays valid until the next call
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dit_pmf dit_pmf;

/* Mirrors the library's internal error categories one-to-one (value =
 * internal code + 1), with 0 reserved for success and 100 for null
 * arguments rejected at the boundary. */
typedef enum dit_status {
    DIT_OK = 0,
    DIT_ERR_BAD_ARGUMENT = 1,
    DIT_ERR_NOT_NORMALIZED = 2,
    DIT_ERR_NEGATIVE_MASS = 3,
    DIT_ERR_EMPTY_SUPPORT = 4,
    DIT_ERR_BAD_PARAMETER = 5,
    DIT_ERR_TRUNCATION_OVERFLOW = 6,
    DIT_ERR_ALPHA_OUT_OF_RANGE = 7,
    DIT_ERR_ALPHA_TOO_CLOSE = 8,
    DIT_ERR_ZERO_MEAN = 9,
    DIT_ERR_INTERIOR_ZERO = 10,
    DIT_ERR_NON_POSITIVE_F = 11,
    DIT_ERR_INCOMPARABLE_SUPPORTS = 12,
    DIT_ERR_DEGENERATE_SUPPORT = 13,
    DIT_ERR_NOT_C_LOG_CONCAVE = 14,
    DIT_ERR_SUPPORT_EXCEEDS_N = 15,
    DIT_ERR_NOT_ULC = 16,
    DIT_ERR_INFINITE_INFORMATION = 17,
    DIT_ERR_OUT_OF_RANGE = 18,
    DIT_ERR_LENGTH_MISMATCH = 19,
    DIT_ERR_BAD_Q = 20,
    DIT_ERR_DIRECTION_NOT_INCREASING = 21,
    DIT_ERR_PARSE = 22,
    DIT_ERR_IO = 23,
    DIT_ERR_INTERNAL = 24,
    DIT_ERR_NULL_ARGUMENT = 100
} dit_status;

const char* dit_version(void);
const char* dit_status_name(dit_status status);
const char* dit_last_error_message(void);
void dit_string_free(char* s);

/* ---- pmf lifecycle ---------------------------------------------------- */

/* Parse a pmf from its JSON representation. */
dit_status dit_pmf_parse(const char* json_text, dit_pmf** out);

/* Construct an analytic family: name is one of poisson, bernoulli,
 * binomial, geometric, negative-binomial, bernoulli-sum, tilted-poisson;
 * params carries the family parameters in declaration order.  Infinite
 * families are truncated with certified tail mass <= trunc_tol. */
dit_status dit_pmf_family(const char* name, const double* params,
                          size_t n_params, double trunc_tol, dit_pmf** out);

void dit_pmf_free(dit_pmf* p);

/* ---- scalar accessors -------------------------------------------------- */

dit_status dit_pmf_size(const dit_pmf* p, size_t* out);
dit_status dit_pmf_mass(const dit_pmf* p, int64_t x, double* out);
dit_status dit_pmf_mean(const dit_pmf* p, double* out);
dit_status dit_pmf_variance(const dit_pmf* p, double* out);
dit_status dit_pmf_entropy(const dit_pmf* p, double* out);
dit_status dit_pmf_tail_bound(const dit_pmf* p, double* out);
dit_status dit_pmf_to_json(const dit_pmf* p, char** json_out);

dit_status dit_scaled_fisher(const dit_pmf* p, double* out);
/* May legitimately set *out to +infinity (finite support). */
dit_status dit_johnstone_information(const dit_pmf* p, double* out);
dit_status dit_c_log_concavity(const dit_pmf* p, double* out);
dit_status dit_ulc(const dit_pmf* p, int* out);

/* ---- composite operations ---------------------------------------------- */

/* names_csv is a comma-separated list drawn from: entropy, mean, variance,
 * tail, K (alias fisher), I (alias johnstone), c (alias clc), ulc,
 * R (alias poincare).  Writes a JSON object keyed by the requested names;
 * non-finite values are encoded as the strings "+inf", "-inf", "nan". */
dit_status dit_compute_functionals(const dit_pmf* p, const char* names_csv,
                                   char** json_out);

/* Run a verification suite.  suite is one of: poisson-approx, maxent,
 * monotonicity, poincare, log-sobolev, shepp-olkin, all.  config_json may
 * be NULL or empty for defaults; recognized fields: master_seed, trunc_tol,
 * trials, grid_size, max_m, tolerance_overrides, output_path.  When
 * output_path is set the report is also appended there, one JSON object
 * per line.  all_hard_pass (optional) receives 1 when no non-exploratory
 * check failed.  Check failures are data, not an error status. */
dit_status dit_verify_suite(const char* suite, const char* config_json,
                            char** report_json_out, int* all_hard_pass);

/* Entropy profile along the affine path p0 -> p1 of m Bernoulli
 * parameters; kind is shannon, renyi, or tsallis (q ignored for shannon).
 * Writes CSV with header t,value,second_difference; the second difference
 * is "nan" on the two endpoint rows. */
dit_status dit_shepp_olkin_profile(const double* p0, const double* p1,
                                   size_t m, int grid_size, const char* kind,
                                   double q, char** csv_out);

/* Convexity witness scan at fixed q (q > 0), or a bisection search for the
 * critical q when q <= 0.  kind is renyi or tsallis.  Writes a JSON
 * report; any witness found is embedded with its full instance data. */
dit_status dit_shepp_olkin_scan(const char* kind, int m, int trials,
                                uint64_t seed, double q, char** json_out);

/* Spectral gap report: the variance-form constant, its maximizer, and the
 * comparison bounds whose hypotheses the input satisfies.  mixed_n < 0
 * selects the forward-difference form; mixed_n >= 0 the mixed-difference
 * form for laws supported on {0..n}. */
dit_status dit_poincare_report(const dit_pmf* p, int mixed_n, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* DIT_DIT_H */
