#ifndef LACUNA_H
#define LACUNA_H

/* Generated by cbindgen from lacuna-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum LacunaStatus {
  LACUNA_STATUS_OK = 0,
  LACUNA_STATUS_NULL_POINTER = 1,
  LACUNA_STATUS_INVALID_ARGUMENT = 2,
  LACUNA_STATUS_NOT_PRIME = 3,
  LACUNA_STATUS_OUT_OF_RANGE = 4,
  LACUNA_STATUS_INTERNAL_ERROR = 5,
} LacunaStatus;

/**
 * Polynomial family selector for the Adelberg entry points.
 */
typedef enum LacunaFamily {
  LACUNA_FAMILY_A = 0,
  LACUNA_FAMILY_B = 1,
} LacunaFamily;

/**
 * Opaque grow-on-demand table of Stirling numbers.
 */
typedef struct LacunaStirlingTable LacunaStirlingTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Binomial coefficient C(n, k) for any signed n (coefficient of x^k in
 * (1+x)^n), as a decimal string.
 *
 * # Safety
 * `out` must be a valid, writable pointer.
 */
enum LacunaStatus lacuna_binomial(int64_t n, int64_t k, char **out);

/**
 * Stirling number of the given kind (1 = cycle, 2 = partition) as a
 * decimal string.
 *
 * # Safety
 * `out` must be a valid, writable pointer.
 */
enum LacunaStatus lacuna_stirling(uint32_t kind, int64_t n, int64_t k, char **out);

/**
 * Residue in [0, p) of the first-kind Stirling number (n, k) modulo a
 * prime p, via the closed form (never touches the exact value).
 *
 * # Safety
 * `out` must be a valid, writable pointer.
 */
enum LacunaStatus lacuna_stirling1_mod_p(int64_t n, int64_t k, int64_t p, int64_t *out);

/**
 * Canonical expanded string of the Adelberg polynomial A_u or B_u.
 *
 * # Safety
 * `out` must be a valid, writable pointer.
 */
enum LacunaStatus lacuna_adelberg_poly(enum LacunaFamily family, int64_t u, char **out);

/**
 * Exact value of A_u(x, y, m) or B_u(y, m) at integer arguments (x is
 * ignored for the B family), as a "num/den" string with the denominator
 * omitted when 1.
 *
 * # Safety
 * `out` must be a valid, writable pointer.
 */
enum LacunaStatus lacuna_adelberg_eval(enum LacunaFamily family,
                                       int64_t u,
                                       int64_t x,
                                       int64_t y,
                                       int64_t m,
                                       char **out);

/**
 * Runs one congruence verification (which = 1, 2 or 3) and returns the
 * report as a single JSON object string.
 *
 * # Safety
 * `out_json` must be a valid, writable pointer.
 */
enum LacunaStatus lacuna_verify_congruence(uint32_t which,
                                           int64_t p,
                                           int64_t m,
                                           int64_t l,
                                           int64_t s,
                                           char **out_json);

/**
 * Releases a string allocated by this library. Passing NULL is a no-op.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void lacuna_string_free(char *s);

/**
 * Creates a Stirling table handle (kind 1 = cycle, 2 = partition).
 * Returns NULL for an unknown kind.
 */
struct LacunaStirlingTable *lacuna_stirling_table_new(uint32_t kind);

/**
 * Entry (n, k) of the table as a decimal string; the table grows as needed.
 *
 * # Safety
 * `table` must be a live handle from [`lacuna_stirling_table_new`] and
 * `out` a valid, writable pointer.
 */
enum LacunaStatus lacuna_stirling_table_entry(struct LacunaStirlingTable *table,
                                              int64_t n,
                                              int64_t k,
                                              char **out);

/**
 * Releases a table handle. Passing NULL is a no-op.
 *
 * # Safety
 * `table` must have come from [`lacuna_stirling_table_new`] and not have
 * been freed before.
 */
void lacuna_stirling_table_free(struct LacunaStirlingTable *table);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LACUNA_H */
