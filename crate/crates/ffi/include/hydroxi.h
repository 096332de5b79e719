#ifndef HYDROXI_H
#define HYDROXI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HxStatus {
  HX_STATUS_OK = 0,
  HX_STATUS_NULL_POINTER = 1,
  HX_STATUS_INVALID_ARGUMENT = 2,
  HX_STATUS_OUT_OF_RANGE = 3,
  HX_STATUS_NUMERICAL = 4,
  HX_STATUS_RESOURCE_CAP = 5,
  HX_STATUS_PANIC = 6,
} HxStatus;

typedef enum HxKind {
  HX_KIND_REGULAR = 0,
  HX_KIND_PSEUDO = 1,
} HxKind;

/**
 * Decomposition of a pseudo-state onto bound states.
 */
typedef struct HxDecomposition HxDecomposition;

/**
 * An axial hydrogen function, regular or pseudo.
 */
typedef struct HxWavefunction HxWavefunction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *hx_version(void);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *hx_last_error_message(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void hx_string_free(char *s);

/**
 * Coefficients of `Ξ_{n,ell,0}` on every bound state with `n' <= n_max`.
 *
 * # Safety
 * `out_report` must be valid for writes.
 */
enum HxStatus hx_decompose(uint32_t n,
                           uint32_t ell,
                           uint32_t n_max,
                           uint32_t digits,
                           struct HxDecomposition **out_report);

/**
 * # Safety
 * `report` must come from [`hx_decompose`] and not be freed twice. Null is
 * ignored.
 */
void hx_decomposition_free(struct HxDecomposition *report);

/**
 * Number of coefficient entries, ordered by `n'` then `ell'`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HxStatus hx_decomposition_len(const struct HxDecomposition *report, size_t *out_len);

/**
 * Entry `index`: quantum numbers, sign and value to double precision.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HxStatus hx_decomposition_entry(const struct HxDecomposition *report,
                                     size_t index,
                                     uint32_t *out_n,
                                     uint32_t *out_ell,
                                     int8_t *out_sign,
                                     double *out_value);

/**
 * Exact square of entry `index` as canonical text, e.g. `(512/243)/(pi^2)`.
 * Free with [`hx_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum HxStatus hx_decomposition_entry_square(const struct HxDecomposition *report,
                                            size_t index,
                                            char **out_text);

/**
 * `P(N)^2` for `1 <= n_cap <= n_max`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HxStatus hx_decomposition_p_squared(const struct HxDecomposition *report,
                                         uint32_t n_cap,
                                         double *out_value);

/**
 * `1 - P(n_max)^2`, a lower bound on the continuum weight.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HxStatus hx_decomposition_continuum_lower_bound(const struct HxDecomposition *report,
                                                     double *out_value);

/**
 * # Safety
 * `out_wf` must be valid for writes.
 */
enum HxStatus hx_wavefunction_new(uint32_t n,
                                  uint32_t ell,
                                  enum HxKind kind,
                                  struct HxWavefunction **out_wf);

/**
 * # Safety
 * `wf` must come from [`hx_wavefunction_new`] and not be freed twice. Null
 * is ignored.
 */
void hx_wavefunction_free(struct HxWavefunction *wf);

/**
 * Value at `(r, theta)`. The pseudo kind fails with `OutOfRange` on the axis.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HxStatus hx_wavefunction_eval(const struct HxWavefunction *wf,
                                   double r,
                                   double theta,
                                   double *out_value);

/**
 * Finite-difference residual of the pseudo-eigenvalue relation at `(r, theta)`.
 *
 * # Safety
 * `out_value` must be valid for writes.
 */
enum HxStatus hx_residual_check(uint32_t n,
                                uint32_t ell,
                                double r,
                                double theta,
                                double h,
                                double *out_value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYDROXI_H */
