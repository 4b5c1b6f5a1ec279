#ifndef NEWTON_LEJA_H
#define NEWTON_LEJA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NlFamily {
  NL_FAMILY_CHEBYSHEV_ASCENDING = 0,
  NL_FAMILY_CHEBYSHEV_LEJA = 1,
  NL_FAMILY_FAST_LEJA = 2,
} NlFamily;

typedef enum NlFunction {
  NL_FUNCTION_RUNGE = 0,
  NL_FUNCTION_HEAVISIDE = 1,
  NL_FUNCTION_SAWTOOTH = 2,
  NL_FUNCTION_SQRT_ABS = 3,
} NlFunction;

typedef enum NlStatus {
  NL_STATUS_OK = 0,
  NL_STATUS_INVALID_ARGUMENT = 1,
  NL_STATUS_DUPLICATE_NODE = 2,
  NL_STATUS_IO = 3,
  NL_STATUS_PARSE = 4,
  NL_STATUS_NULL_POINTER = 5,
  NL_STATUS_BUFFER_TOO_SMALL = 6,
  NL_STATUS_PANIC = 7,
} NlStatus;

/**
 * Opaque Newton interpolant.
 */
typedef struct NlInterpolant NlInterpolant;

/**
 * Opaque Fast Leja candidate pool.
 */
typedef struct NlNodePool NlNodePool;

typedef struct NlNorms {
  double l1;
  double l2;
  double linf;
} NlNorms;

typedef struct NlErrorRecord {
  size_t n;
  double l1;
  double l2;
  double linf;
  double residual;
  double wall_time;
} NlErrorRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the calling thread's last error message into `buf` (NUL-terminated,
 * truncated to `len`) and returns the full message length excluding the NUL.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t nl_last_error_message(char *buf, size_t len);

/**
 * Writes the `m` Chebyshev roots on `[-b, b]` in index order.
 *
 * # Safety
 * `out` must point to `out_len` writable doubles.
 */
enum NlStatus nl_chebyshev_roots(size_t m, double b, double *out, size_t out_len);

/**
 * Writes `n` nodes of `family` on `[lo, hi]`.
 *
 * # Safety
 * `out` must point to `out_len` writable doubles.
 */
enum NlStatus nl_nodes(enum NlFamily family,
                       double lo,
                       double hi,
                       size_t n,
                       double *out,
                       size_t out_len);

/**
 * Writes the Leja ordering of `points` into `out` (both of length `len`).
 *
 * # Safety
 * `points` must point to `len` readable doubles and `out` to `len` writable ones.
 */
enum NlStatus nl_leja_order(const double *points, size_t len, double *out);

/**
 * `sum_k ln|point - placed_k|`; negative infinity when `point` is a placed node.
 *
 * # Safety
 * `placed` must point to `len` readable doubles.
 */
double nl_log_multiplicative_distance(double point, const double *placed, size_t len);

/**
 * Creates a Fast Leja pool on `[lo, hi]` holding the two endpoints.
 *
 * # Safety
 * `pool` must be a valid pointer to write the handle into.
 */
enum NlStatus nl_pool_new(double lo, double hi, struct NlNodePool **pool);

/**
 * Selects `extra` more nodes; earlier nodes are unchanged.
 *
 * # Safety
 * `pool` must come from [`nl_pool_new`] and not be freed.
 */
enum NlStatus nl_pool_extend(struct NlNodePool *pool, size_t extra);

/**
 * Number of selected nodes, or 0 for a null handle.
 *
 * # Safety
 * `pool` must be null or a live handle.
 */
size_t nl_pool_len(const struct NlNodePool *pool);

/**
 * Writes the first `n` selected nodes on the pool's interval.
 *
 * # Safety
 * `pool` must be a live handle and `out` must point to `n` writable doubles.
 */
enum NlStatus nl_pool_nodes(const struct NlNodePool *pool, size_t n, double *out);

/**
 * # Safety
 * `pool` must be null or a handle not freed before.
 */
void nl_pool_free(struct NlNodePool *pool);

/**
 * Fits the Newton interpolant of `values` at `nodes` (both of length `len`).
 *
 * # Safety
 * Input arrays must hold `len` doubles; `out` must be a valid pointer.
 */
enum NlStatus nl_interp_fit(const double *nodes,
                            const double *values,
                            size_t len,
                            struct NlInterpolant **out);

/**
 * Adds one node in place; existing coefficients are unchanged.
 *
 * # Safety
 * `p` must be a live handle.
 */
enum NlStatus nl_interp_append(struct NlInterpolant *p, double x, double y);

/**
 * Number of nodes, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t nl_interp_len(const struct NlInterpolant *p);

/**
 * Writes the Newton coefficients.
 *
 * # Safety
 * `p` must be a live handle and `out` must point to `out_len` writable doubles.
 */
enum NlStatus nl_interp_coeffs(const struct NlInterpolant *p, double *out, size_t out_len);

/**
 * Horner evaluation at `x`; NaN for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
double nl_interp_evaluate(const struct NlInterpolant *p, double x);

/**
 * Evaluates at each of the `len` points `xs`, writing into `out`.
 *
 * # Safety
 * `p` must be a live handle; `xs` and `out` must hold `len` doubles.
 */
enum NlStatus nl_interp_evaluate_grid(const struct NlInterpolant *p,
                                      const double *xs,
                                      size_t len,
                                      double *out);

/**
 * # Safety
 * `p` must be null or a handle not freed before.
 */
void nl_interp_free(struct NlInterpolant *p);

double nl_test_function(enum NlFunction function, double x);

/**
 * Normalized trapezoidal L1/L2 norms and the maximum of `len` grid samples.
 *
 * # Safety
 * `errors` must hold `len` doubles and `out` must be a valid pointer.
 */
enum NlStatus nl_norms(const double *errors, size_t len, struct NlNorms *out);

/**
 * Interpolates `function` on `n` nodes of `family` over `[lo, hi]` and
 * measures the error on the `2n`-strip grid.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum NlStatus nl_measure(enum NlFunction function,
                         enum NlFamily family,
                         double lo,
                         double hi,
                         size_t n,
                         struct NlErrorRecord *out);

/**
 * Stores the first `n` Fast Leja points on `[lo, hi]` as a node library.
 *
 * # Safety
 * `path` must be a NUL-terminated string.
 */
enum NlStatus nl_library_precompute(const char *path, double lo, double hi, size_t n);

/**
 * Loads the first `n` library nodes mapped onto `[lo, hi]`.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` must point to `n` writable doubles.
 */
enum NlStatus nl_library_load(const char *path, size_t n, double lo, double hi, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NEWTON_LEJA_H */
