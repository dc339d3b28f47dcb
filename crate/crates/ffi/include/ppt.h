#ifndef PPT_FFI_H
#define PPT_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum PptStatus {
  PPT_STATUS_OK = 0,
  PPT_STATUS_NULL_ARGUMENT = 1,
  PPT_STATUS_INVALID_UTF8 = 2,
  PPT_STATUS_PARSE_ERROR = 3,
  PPT_STATUS_INVALID_TRIPLE = 4,
  PPT_STATUS_NOT_PYTHAGOREAN = 5,
  PPT_STATUS_NOT_PRIMITIVE = 6,
  PPT_STATUS_MALFORMED_PATH = 7,
  PPT_STATUS_DOMAIN_ERROR = 8,
  PPT_STATUS_DEPTH_LIMIT = 9,
  /**
   * A cross-check between two independent computations failed.
   */
  PPT_STATUS_INVARIANT_VIOLATION = 10,
} PptStatus;

typedef enum PptTree {
  PPT_TREE_BARNING_HALL = 0,
  PPT_TREE_NEW = 1,
} PptTree;

/**
 * Opaque primitive triple.
 */
typedef struct PptTripleHandle PptTripleHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *ppt_version(void);

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call into this library on the same thread; do not free.
 */
const char *ppt_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void ppt_string_free(char *s);

/**
 * Parses a primitive triple from decimal strings; legs may be swapped.
 *
 * # Safety
 * `a`, `b`, `c` must be NUL-terminated strings and `out` a writable pointer.
 */
enum PptStatus ppt_triple_new(const char *a,
                              const char *b,
                              const char *c,
                              struct PptTripleHandle **out);

/**
 * Builds a primitive triple from machine integers.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum PptStatus ppt_triple_from_u64(uint64_t a,
                                   uint64_t b,
                                   uint64_t c,
                                   struct PptTripleHandle **out);

/**
 * # Safety
 * `h` must be NULL or a handle from this library, not yet freed.
 */
void ppt_triple_free(struct PptTripleHandle *h);

/**
 * `"a,b,c"` in canonical order (odd leg, even leg, hypotenuse); free with
 * `ppt_string_free`. NULL on a null handle.
 *
 * # Safety
 * `h` must be a live handle.
 */
char *ppt_triple_to_string(const struct PptTripleHandle *h);

/**
 * One component (0 = odd leg, 1 = even leg, 2 = hypotenuse) as a decimal
 * string; NULL on a bad index or null handle.
 *
 * # Safety
 * `h` must be a live handle.
 */
char *ppt_triple_component(const struct PptTripleHandle *h, uint32_t index);

/**
 * Writes the A, B, C children to `out[0..3]`.
 *
 * # Safety
 * `h` must be a live handle and `out` must point to three writable slots.
 */
enum PptStatus ppt_children(enum PptTree tree,
                            const struct PptTripleHandle *h,
                            struct PptTripleHandle **out);

/**
 * Writes the parent to `*out_parent` and its letter (`'A'`, `'B'`, `'C'`)
 * to `*out_letter`. At the root both are set to NULL and `0`.
 *
 * # Safety
 * `h` must be a live handle; out pointers must be writable.
 */
enum PptStatus ppt_parent(enum PptTree tree,
                          const struct PptTripleHandle *h,
                          struct PptTripleHandle **out_parent,
                          char *out_letter);

/**
 * Follows a path code (letters A/B/C, either case) from the root.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` writable.
 */
enum PptStatus ppt_navigate(enum PptTree tree, const char *path, struct PptTripleHandle **out);

/**
 * Writes the path code of `h` (empty for the root) to `*out_path`; free it
 * with `ppt_string_free`.
 *
 * # Safety
 * `h` must be a live handle and `out_path` writable.
 */
enum PptStatus ppt_locate(enum PptTree tree, const struct PptTripleHandle *h, char **out_path);

/**
 * The `info` report for any Pythagorean triple, as the CLI's JSON.
 *
 * # Safety
 * `a`, `b`, `c` must be NUL-terminated strings and `out_json` writable.
 */
enum PptStatus ppt_info_json(const char *a, const char *b, const char *c, char **out_json);

/**
 * Two-term decompositions of `2/n` for odd `n ≥ 3`, as the CLI's JSON.
 *
 * # Safety
 * `out_json` must be writable.
 */
enum PptStatus ppt_rhind_json(uint64_t n, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PPT_FFI_H */
