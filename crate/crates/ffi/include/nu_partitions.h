#ifndef NU_PARTITIONS_H
#define NU_PARTITIONS_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Class index bound accepted by `nu_count` and `nu_p_nu`.
 */
#define NU_MAX_N 100000

typedef enum NuStatus {
  NU_STATUS_OK = 0,
  NU_STATUS_NULL_POINTER = 1,
  NU_STATUS_INVALID_ARGUMENT = 2,
  NU_STATUS_INVALID_PARTITION = 3,
  NU_STATUS_EMPTY_SHAPE = 4,
  NU_STATUS_NOT_SELF_CONJUGATE = 5,
  NU_STATUS_INVALID_HOOK_LIST = 6,
  NU_STATUS_NOT_DISTINCT_ODD = 7,
  NU_STATUS_MALFORMED_S_CLASS = 8,
  NU_STATUS_MALFORMED_D_CLASS = 9,
  NU_STATUS_MALFORMED_DO_CLASS = 10,
  NU_STATUS_POSTCONDITION_VIOLATED = 11,
  NU_STATUS_TRUNCATION_MISMATCH = 12,
  NU_STATUS_NON_UNIT_CONSTANT_TERM = 13,
  NU_STATUS_OVERFLOW = 14,
  NU_STATUS_PANIC = 15,
} NuStatus;

typedef enum NuClass {
  NU_CLASS_O = 0,
  NU_CLASS_S = 1,
  NU_CLASS_D = 2,
  NU_CLASS_DO = 3,
} NuClass;

/**
 * Opaque odd Ferrers graph handle.
 */
typedef struct NuGraph NuGraph;

/**
 * Opaque partition handle.
 */
typedef struct NuPartition NuPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *nu_status_message(enum NuStatus status);

/**
 * Description of the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *nu_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void nu_string_free(char *s);

/**
 * Builds a partition from `len` parts (weakly decreasing, each >= 1).
 * `parts` may be null when `len` is 0.
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be writable.
 */
enum NuStatus nu_partition_new(const uint64_t *parts, size_t len, struct NuPartition **out);

/**
 * Parses comma-separated parts such as `"5,5,5,3,3"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum NuStatus nu_partition_parse(const char *text, struct NuPartition **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void nu_partition_free(struct NuPartition *p);

/**
 * Number of parts; 0 for null.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t nu_partition_len(const struct NuPartition *p);

/**
 * Sum of the parts; 0 for null.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
uint64_t nu_partition_weight(const struct NuPartition *p);

/**
 * Copies up to `cap` parts into `buf` and returns the total number of parts,
 * so a short buffer can be detected and resized.
 *
 * # Safety
 * `p` must be null or a live handle; `buf` must have room for `cap` values.
 */
size_t nu_partition_copy_parts(const struct NuPartition *p, uint64_t *buf, size_t cap);

/**
 * Comma-separated text form; free with `nu_string_free`. Null for null.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *nu_partition_to_string(const struct NuPartition *p);

/**
 * # Safety
 * `p` must be null or a live handle.
 */
bool nu_partition_is_self_conjugate(const struct NuPartition *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_partition_conjugate(const struct NuPartition *p, struct NuPartition **out);

/**
 * Wraps a copy of `shape` as an odd Ferrers graph.
 *
 * # Safety
 * `shape` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_graph_new(const struct NuPartition *shape, struct NuGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, not yet freed.
 */
void nu_graph_free(struct NuGraph *g);

/**
 * Sum of the cell weights; 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
uint64_t nu_graph_weight(const struct NuGraph *g);

/**
 * A copy of the graph's shape.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_graph_shape(const struct NuGraph *g, struct NuPartition **out);

/**
 * Digit diagram, rows separated by `\n`; free with `nu_string_free`.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
char *nu_graph_render_ascii(const struct NuGraph *g);

/**
 * φ with its image checked for membership in S.
 *
 * # Safety
 * `input` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_phi(const struct NuGraph *input, struct NuPartition **out);

/**
 * # Safety
 * `input` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_phi_inverse(const struct NuPartition *input, struct NuGraph **out);

/**
 * # Safety
 * `input` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_o_to_d(const struct NuGraph *input, struct NuPartition **out);

/**
 * # Safety
 * `input` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_d_to_o(const struct NuPartition *input, struct NuGraph **out);

/**
 * # Safety
 * `input` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_d_to_do(const struct NuPartition *input, struct NuPartition **out);

/**
 * # Safety
 * `input` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_do_to_d(const struct NuPartition *input, struct NuPartition **out);

/**
 * # Safety
 * `input` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_sc_to_distinct_odd(const struct NuPartition *input, struct NuPartition **out);

/**
 * # Safety
 * `input` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_distinct_odd_to_sc(const struct NuPartition *input, struct NuPartition **out);

/**
 * Membership of `p` in class `class` at index `n`. For `NU_CLASS_O`, `p` is
 * read as the graph's shape.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum NuStatus nu_is_in_class(enum NuClass class_,
                             const struct NuPartition *p,
                             uint64_t n,
                             bool *out);

/**
 * Size of class `class` at index `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum NuStatus nu_count(enum NuClass class_, uint64_t n, uint64_t *out);

/**
 * Coefficient of q^n in ν(−q).
 *
 * # Safety
 * `out` must be writable.
 */
enum NuStatus nu_p_nu(uint64_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NU_PARTITIONS_H */
