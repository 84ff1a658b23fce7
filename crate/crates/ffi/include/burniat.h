#ifndef BURNIAT_H
#define BURNIAT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BurniatStatus {
  BURNIAT_STATUS_OK = 0,
  BURNIAT_STATUS_NULL_POINTER = 1,
  BURNIAT_STATUS_INVALID_UTF8 = 2,
  BURNIAT_STATUS_PARSE_ERROR = 3,
  BURNIAT_STATUS_INVALID_ARRANGEMENT = 4,
  BURNIAT_STATUS_INVALID_K_SQUARED = 5,
  BURNIAT_STATUS_CLASS_MISMATCH = 6,
  BURNIAT_STATUS_INTERNAL = 7,
} BurniatStatus;

/**
 * A validated nine-line arrangement.
 */
typedef struct BurniatArrangement BurniatArrangement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into this library on the same thread.
 */
const char *burniat_last_error(void);

/**
 * Static description of a status code.
 */
const char *burniat_status_message(enum BurniatStatus status);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void burniat_string_free(char *s);

/**
 * Parses and validates an arrangement from its JSON form.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum BurniatStatus burniat_arrangement_parse(const char *json, struct BurniatArrangement **out);

/**
 * The shipped arrangement for `k_squared`; `nodal` matters only for 4.
 *
 * # Safety
 * `out` must be writable.
 */
enum BurniatStatus burniat_arrangement_reference(int64_t k_squared,
                                                 bool nodal,
                                                 struct BurniatArrangement **out);

/**
 * # Safety
 * `h` must be null or a handle from this library, not yet freed.
 */
void burniat_arrangement_free(struct BurniatArrangement *h);

/**
 * `K²` of the surface and whether it is of nodal type.
 *
 * # Safety
 * `h` must be a live handle; `k_squared` and `nodal` must be writable.
 */
enum BurniatStatus burniat_arrangement_classify(const struct BurniatArrangement *h,
                                                int64_t *k_squared,
                                                bool *nodal);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum BurniatStatus burniat_arrangement_to_json(const struct BurniatArrangement *h, char **out);

/**
 * The `π₁` row for `k_squared` from the stated relation vectors, as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum BurniatStatus burniat_pi1_json(int64_t k_squared, bool nodal, char **out);

/**
 * The `π₁` row with relations read off an arrangement of the given `K²`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum BurniatStatus burniat_pi1_from_arrangement_json(const struct BurniatArrangement *h,
                                                     int64_t k_squared,
                                                     char **out);

/**
 * The full table with discrepancy checks, as JSON. `passed` receives
 * whether every check held.
 *
 * # Safety
 * `out` and `passed` must be writable.
 */
enum BurniatStatus burniat_verify_theorem_json(char **out, bool *passed);

/**
 * Dimension of the `G²`-invariant sections and of the primary family.
 *
 * # Safety
 * Both pointers must be writable.
 */
enum BurniatStatus burniat_moduli_dimensions(uint32_t *sections, uint32_t *dimension);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BURNIAT_H */
