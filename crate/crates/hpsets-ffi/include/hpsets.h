/* C interface to the hpsets library. Generated by cbindgen; do not edit. */

#ifndef HPSETS_H
#define HPSETS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum HpsStatus {
  HPS_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  HPS_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  HPS_STATUS_INVALID_UTF8 = 2,
  /**
   * Unparseable input: facet file, cochain file, signature list or
   * generator spec.
   */
  HPS_STATUS_PARSE = 3,
  /**
   * A domain precondition failed (validation, closedness,
   * orientability).
   */
  HPS_STATUS_DOMAIN = 4,
  /**
   * A dimension argument was out of range.
   */
  HPS_STATUS_OUT_OF_RANGE = 5,
} HpsStatus;

/**
 * Opaque handle to a cochain tied to the complex it was parsed
 * against.
 */
typedef struct HpsCochain HpsCochain;

/**
 * Opaque handle to an immutable simplicial complex.
 */
typedef struct HpsComplex HpsComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message for the current thread; empty until an error
 * occurs. The pointer stays valid until the next failing call on the
 * same thread.
 */
const char *hps_last_error_message(void);

/**
 * Builds a complex from a generator spec (`sphere:n`, `torus-grid:k`,
 * `klein-grid:k`, `rp2-min`) or a facet file path.
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string and `out` a valid
 * pointer; on `Ok` the handle must be released with
 * [`hps_complex_free`].
 */
enum HpsStatus hps_complex_from_spec(const char *spec, struct HpsComplex **out);

/**
 * Builds a complex from facet file text (one facet per line).
 *
 * # Safety
 * Same contract as [`hps_complex_from_spec`].
 */
enum HpsStatus hps_complex_from_facet_text(const char *text, struct HpsComplex **out);

/**
 * Releases a complex handle. Null is ignored.
 *
 * # Safety
 * `ptr` must have come from this library and not be freed twice.
 */
void hps_complex_free(struct HpsComplex *ptr);

/**
 * Dimension of the complex; 0 on a null handle.
 *
 * # Safety
 * `ptr` must be a live handle from this library or null.
 */
size_t hps_complex_dim(const struct HpsComplex *ptr);

/**
 * Number of p-cells; 0 when p exceeds the dimension or the handle is
 * null.
 *
 * # Safety
 * `ptr` must be a live handle from this library or null.
 */
size_t hps_complex_cell_count(const struct HpsComplex *ptr, size_t p);

/**
 * Euler characteristic; 0 on a null handle.
 *
 * # Safety
 * `ptr` must be a live handle from this library or null.
 */
int64_t hps_complex_euler_characteristic(const struct HpsComplex *ptr);

/**
 * Whether the complex passes the closed-pseudomanifold checks.
 *
 * # Safety
 * `ptr` must be a live handle from this library or null.
 */
bool hps_complex_is_pseudomanifold(const struct HpsComplex *ptr);

/**
 * Whether a coherent orientation exists. False on non-pseudomanifolds.
 *
 * # Safety
 * `ptr` must be a live handle from this library or null.
 */
bool hps_complex_is_orientable(const struct HpsComplex *ptr);

/**
 * Rational Betti number in dimension p.
 *
 * # Safety
 * `ptr` must be a live handle and `out` a valid pointer.
 */
enum HpsStatus hps_complex_betti(const struct HpsComplex *ptr, size_t p, size_t *out);

/**
 * Dimension of the harmonic space in dimension p (equals the Betti
 * number).
 *
 * # Safety
 * `ptr` must be a live handle and `out` a valid pointer.
 */
enum HpsStatus hps_complex_harmonic_dim(const struct HpsComplex *ptr, size_t p, size_t *out);

/**
 * Parses a cochain file (`pset <p>` header, one cell and value per
 * line) against the complex.
 *
 * # Safety
 * `complex` must be a live handle, `text` a valid string, `out` a
 * valid pointer; on `Ok` release the result with [`hps_cochain_free`].
 */
enum HpsStatus hps_cochain_parse(const struct HpsComplex *complex,
                                 const char *text,
                                 struct HpsCochain **out);

/**
 * Releases a cochain handle. Null is ignored.
 *
 * # Safety
 * `ptr` must have come from this library and not be freed twice.
 */
void hps_cochain_free(struct HpsCochain *ptr);

/**
 * Degree of the cochain; 0 on a null handle.
 *
 * # Safety
 * `ptr` must be a live handle from this library or null.
 */
size_t hps_cochain_dim(const struct HpsCochain *ptr);

/**
 * Whether the cochain is closed on the complex.
 *
 * # Safety
 * Both handles must be live and matched; `out` must be valid.
 */
enum HpsStatus hps_cochain_is_closed(const struct HpsComplex *complex,
                                     const struct HpsCochain *cochain,
                                     bool *out);

/**
 * Whether the cochain is harmonic (closed and dual closed).
 *
 * # Safety
 * Both handles must be live and matched; `out` must be valid.
 */
enum HpsStatus hps_cochain_is_harmonic(const struct HpsComplex *complex,
                                       const struct HpsCochain *cochain,
                                       bool *out);

/**
 * Harmonic projection of a closed cochain; fails with `Domain` when
 * the input is not closed.
 *
 * # Safety
 * Both handles must be live and matched; `out` must be valid; on `Ok`
 * release the result with [`hps_cochain_free`].
 */
enum HpsStatus hps_cochain_harmonic_projection(const struct HpsComplex *complex,
                                               const struct HpsCochain *cochain,
                                               struct HpsCochain **out);

/**
 * Renders a cochain in the pset text format (exact rationals).
 *
 * # Safety
 * Both handles must be live and matched; `out` must be valid; free the
 * string with [`hps_string_free`].
 */
enum HpsStatus hps_cochain_format(const struct HpsComplex *complex,
                                  const struct HpsCochain *cochain,
                                  char **out);

/**
 * Runs the search harness over newline-separated corpus specs with a
 * signature list like `(2),(0,2)`. The report is the same
 * machine-format text the CLI emits.
 *
 * # Safety
 * `corpus_specs` and `signatures` must be valid strings, `out` a valid
 * pointer; free the report with [`hps_string_free`].
 */
enum HpsStatus hps_search(const char *corpus_specs,
                          size_t p,
                          const char *signatures,
                          bool signed_,
                          bool subdivision_invariance,
                          char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `ptr` must have come from this library and not be freed twice.
 */
void hps_string_free(char *ptr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HPSETS_H */
