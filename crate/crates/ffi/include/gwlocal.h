#ifndef GWLOCAL_H
#define GWLOCAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirroring the CLI exit codes.
 */
typedef enum GwStatus {
  /**
   * Success.
   */
  GW_STATUS_OK = 0,
  /**
   * A verification check or table reproduction failed.
   */
  GW_STATUS_CHECK_FAILED = 1,
  /**
   * The geometry string is invalid (grammar or Calabi-Yau condition).
   */
  GW_STATUS_BAD_GEOMETRY = 2,
  /**
   * No genus-zero recipe for the requested geometry.
   */
  GW_STATUS_UNSUPPORTED = 3,
  /**
   * A null pointer or out-of-range argument was passed.
   */
  GW_STATUS_INVALID_ARGUMENT = 4,
  /**
   * Internal error (should not happen; indicates a bug).
   */
  GW_STATUS_INTERNAL = 5,
} GwStatus;

/**
 * Opaque geometry handle.
 */
typedef struct GwGeometry GwGeometry;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a geometry string (grammar `P<l>/O(-c1,...,-cm)` or preset name)
 * into a handle. On success writes the handle to `out` and returns Ok.
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string; `out` must be a valid
 * pointer to writable memory.
 */
enum GwStatus gw_geometry_parse(const char *spec, struct GwGeometry **out);

/**
 * Release a geometry handle. Passing null is a no-op.
 *
 * # Safety
 * `geometry` must be null or a pointer returned by [`gw_geometry_parse`]
 * that has not been freed yet.
 */
void gw_geometry_free(struct GwGeometry *geometry);

/**
 * Canonical form of the geometry, e.g. "P3/O(-1,-3)". Free the result with
 * [`gw_string_free`].
 *
 * # Safety
 * `geometry` must be a live handle from [`gw_geometry_parse`].
 */
char *gw_geometry_canonical(const struct GwGeometry *geometry);

/**
 * Genus-one invariants N_{1,d} for d = 1..max_degree as a JSON table
 * {"geometry", "kind", "degrees", "values", "integral"}.
 *
 * # Safety
 * `geometry` must be a live handle; `out_json` must be writable.
 */
enum GwStatus gw_genus1_invariants_json(const struct GwGeometry *geometry,
                                        uint32_t max_degree,
                                        char **out_json);

/**
 * Both genus-zero BPS tables (one-point then two-point) for d = 1..max_degree
 * as a JSON array of tables. Fails with Unsupported for geometries without a
 * genus-zero recipe.
 *
 * # Safety
 * `geometry` must be a live handle; `out_json` must be writable.
 */
enum GwStatus gw_bps_tables_json(const struct GwGeometry *geometry,
                                 uint32_t max_degree,
                                 char **out_json);

/**
 * Run the verification suite with sweep bound `max_n` (0 picks the default
 * of 10) and `seeds` weight draws per geometry (0 picks the default of 3).
 * Writes a JSON array of check results and returns CheckFailed if any check
 * failed.
 *
 * # Safety
 * `out_json` must be writable.
 */
enum GwStatus gw_verify_json(uint32_t max_n, uint64_t seeds, char **out_json);

/**
 * Recompute the bundled golden tables and report mismatches as JSON.
 * Returns CheckFailed when any derivable cell disagrees.
 *
 * # Safety
 * `out_json` must be writable.
 */
enum GwStatus gw_reproduce_json(char **out_json);

/**
 * Release a string returned by this library. Passing null is a no-op.
 *
 * # Safety
 * `s` must be null or a pointer returned by one of the `_json`/`canonical`
 * functions that has not been freed yet.
 */
void gw_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GWLOCAL_H */
