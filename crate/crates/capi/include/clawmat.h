#ifndef CLAWMAT_H
#define CLAWMAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum ClawmatStatus {
  /**
   * success
   */
  CLAWMAT_STATUS_OK = 0,
  /**
   * invalid argument or unparsable input
   */
  CLAWMAT_STATUS_INVALID_INPUT = 1,
  /**
   * object size beyond the supported fixed capacities
   */
  CLAWMAT_STATUS_CAPACITY = 2,
  /**
   * a null pointer was passed where an object was required
   */
  CLAWMAT_STATUS_NULL_POINTER = 3,
  /**
   * an internal panic was caught; the library state is still usable
   */
  CLAWMAT_STATUS_PANIC = 4,
  /**
   * campaign ran but the observed data contradicts the prediction
   */
  CLAWMAT_STATUS_MISMATCH = 5,
  /**
   * campaign stopped before covering the configured range
   */
  CLAWMAT_STATUS_INCOMPLETE = 6,
} ClawmatStatus;

/**
 * Opaque matroid handle.
 */
typedef struct ClawmatMatroid ClawmatMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message for this thread into `buf` (NUL-terminated,
 * truncated to `cap` bytes). Returns the full message length in bytes.
 */
uintptr_t clawmat_last_error(char *buf, uintptr_t cap);

/**
 * Parses a matroid from its text format (binary column or basis-list form).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` a valid pointer.
 */
enum ClawmatStatus clawmat_matroid_parse(const char *text, struct ClawmatMatroid **out);

/**
 * Builds a named matroid family from a spec string such as `pg:4`,
 * `mrt:5,2`, or `cc:3,3+1`. Graph-valued specs are rejected here.
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string; `out` a valid pointer.
 */
enum ClawmatStatus clawmat_family_build(const char *spec, struct ClawmatMatroid **out);

/**
 * Releases a matroid handle. Null is a no-op.
 *
 * # Safety
 * `m` must have come from this library and not be freed twice.
 */
void clawmat_matroid_free(struct ClawmatMatroid *m);

/**
 * Releases a string returned through an out parameter. Null is a no-op.
 *
 * # Safety
 * `s` must have come from this library and not be freed twice.
 */
void clawmat_string_free(char *s);

/**
 * Ground set size, or -1 on a null handle.
 *
 * # Safety
 * `m` must be a live handle from this library.
 */
int clawmat_matroid_size(const struct ClawmatMatroid *m);

/**
 * Rank of the subset given as a bitmask over element indices, or -1 on
 * error (null handle, mask outside the ground set).
 *
 * # Safety
 * `m` must be a live handle from this library.
 */
int clawmat_matroid_rank(const struct ClawmatMatroid *m, uint64_t subset);

/**
 * Size of a largest claw (independent flat), or -1 on error.
 *
 * # Safety
 * `m` must be a live handle from this library.
 */
int clawmat_matroid_max_claw(const struct ClawmatMatroid *m);

/**
 * Writes 1 to `out` when the matroid has a claw of exactly `k` elements,
 * 0 otherwise.
 *
 * # Safety
 * `m` must be a live handle; `out` a valid pointer.
 */
enum ClawmatStatus clawmat_matroid_has_k_claw(const struct ClawmatMatroid *m,
                                              uintptr_t k,
                                              int *out);

/**
 * Serializes the matroid into its text format.
 *
 * # Safety
 * `m` must be a live handle; `out` a valid pointer; free the result with
 * `clawmat_string_free`.
 */
enum ClawmatStatus clawmat_matroid_serialize(const struct ClawmatMatroid *m, char **out);

/**
 * Runs the induced-forest-free graph campaign and returns the JSON report.
 * `Ok` means the prediction matched; `Mismatch`/`Incomplete` mirror the
 * campaign verdict and still fill `json_out`.
 *
 * # Safety
 * `json_out` must be a valid pointer; free the result with
 * `clawmat_string_free`.
 */
enum ClawmatStatus clawmat_verify_graph(uintptr_t n, uintptr_t t, char **json_out);

/**
 * Runs the loopless lower-bound campaign and returns the JSON report.
 * Status semantics match `clawmat_verify_graph`.
 *
 * # Safety
 * `json_out` must be a valid pointer; free the result with
 * `clawmat_string_free`.
 */
enum ClawmatStatus clawmat_verify_lowrank(uintptr_t r,
                                          uintptr_t t,
                                          uintptr_t n_max,
                                          char **json_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLAWMAT_H */
