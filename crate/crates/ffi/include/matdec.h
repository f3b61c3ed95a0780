#ifndef MATDEC_H
#define MATDEC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 `relation` values for [`matdec_class_count`].
 */
#define MATDEC_RELATION_SIM 0

#define MATDEC_RELATION_REFINED 1

typedef enum MatdecStatus {
  MATDEC_STATUS_OK = 0,
  MATDEC_STATUS_NULL_POINTER = 1,
  MATDEC_STATUS_PARSE = 2,
  MATDEC_STATUS_DOMAIN = 3,
  MATDEC_STATUS_SIZE_GUARD = 4,
  MATDEC_STATUS_UNSUPPORTED = 5,
  MATDEC_STATUS_NOT_IN_GROUND = 6,
  MATDEC_STATUS_INVALID_UTF8 = 7,
  MATDEC_STATUS_BUFFER_TOO_SMALL = 8,
  MATDEC_STATUS_INVALID_ARGUMENT = 9,
  MATDEC_STATUS_PANIC = 10,
} MatdecStatus;

/*
 A parsed instance together with its independence oracle.
 */
typedef struct MatdecMatroid MatdecMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses a NUL-terminated instance text into a new handle stored in `*out`.
 The handle must be released with [`matdec_free`].

 # Safety
 `text` must be NUL-terminated; `out` must be valid for writes.
 */
enum MatdecStatus matdec_parse(const char *text, struct MatdecMatroid **out);

/*
 Releases a handle from [`matdec_parse`]. Null is ignored.

 # Safety
 `m` must be null or a handle not yet freed.
 */
void matdec_free(struct MatdecMatroid *m);

/*
 # Safety
 `m` must be a live handle and `out` valid for writes.
 */
enum MatdecStatus matdec_ground_size(const struct MatdecMatroid *m, size_t *out);

/*
 Copies the ground set ids in ascending order into `buf`. `*len` receives
 the ground set size; if it exceeds `cap` nothing is copied and
 [`MatdecStatus::BufferTooSmall`] is returned.

 # Safety
 `buf` must be valid for `cap` writes (or null when `cap` is 0).
 */
enum MatdecStatus matdec_ground_ids(const struct MatdecMatroid *m,
                                    uint32_t *buf,
                                    size_t cap,
                                    size_t *len);

/*
 # Safety
 `ids` must be valid for `len` reads; `out` valid for writes.
 */
enum MatdecStatus matdec_is_independent(const struct MatdecMatroid *m,
                                        const uint32_t *ids,
                                        size_t len,
                                        bool *out);

/*
 # Safety
 As [`matdec_is_independent`].
 */
enum MatdecStatus matdec_rank(const struct MatdecMatroid *m,
                              const uint32_t *ids,
                              size_t len,
                              size_t *out);

/*
 `r(U) + r(E - U) - r(E)` for the set `U` of the given ids.

 # Safety
 As [`matdec_is_independent`].
 */
enum MatdecStatus matdec_connectivity(const struct MatdecMatroid *m,
                                      const uint32_t *ids,
                                      size_t len,
                                      size_t *out);

/*
 Number of classes of subsets of `U` under the exact boundary equivalence
 ([`MATDEC_RELATION_SIM`]) or the instance's efficient refinement
 ([`MATDEC_RELATION_REFINED`]).

 # Safety
 As [`matdec_is_independent`].
 */
enum MatdecStatus matdec_class_count(const struct MatdecMatroid *m,
                                     const uint32_t *ids,
                                     size_t len,
                                     uint32_t relation,
                                     size_t *out);

/*
 # Safety
 `m` must be a live handle and `out` valid for writes.
 */
enum MatdecStatus matdec_branch_width(const struct MatdecMatroid *m, size_t *out);

/*
 # Safety
 `m` must be a live handle and `out` valid for writes.
 */
enum MatdecStatus matdec_decomposition_width(const struct MatdecMatroid *m, size_t *out);

/*
 Writes the canonical text of the instance to `*out`, to be released with
 [`matdec_string_free`].

 # Safety
 `m` must be a live handle and `out` valid for writes.
 */
enum MatdecStatus matdec_write_instance(const struct MatdecMatroid *m, char **out);

/*
 Releases a string from [`matdec_write_instance`]. Null is ignored.

 # Safety
 `s` must be null or a string from this library not yet freed.
 */
void matdec_string_free(char *s);

/*
 Copies the calling thread's last error message (NUL-terminated, truncated
 to fit) into `buf` and returns the length it needs including the NUL.

 # Safety
 `buf` must be valid for `cap` writes, or null when `cap` is 0.
 */
size_t matdec_last_error_message(char *buf, size_t cap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATDEC_H */
