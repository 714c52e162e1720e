#ifndef NPRIME_H
#define NPRIME_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum NpStatus {
  NP_STATUS_OK = 0,
  NP_STATUS_NULL_POINTER = 1,
  NP_STATUS_USAGE = 2,
  NP_STATUS_LABELING_INVALID = 3,
  NP_STATUS_INVALID_SPEC = 4,
  NP_STATUS_UNSUPPORTED_PARAMETERS = 5,
  NP_STATUS_PRECONDITION_VIOLATED = 6,
  NP_STATUS_UNSUPPORTED_STRUCTURE = 7,
  NP_STATUS_PARSE = 8,
  NP_STATUS_INVALID_UTF8 = 9,
  NP_STATUS_BUFFER_TOO_SMALL = 10,
  NP_STATUS_PANIC = 11,
} NpStatus;

/**
 * Outcome of `np_find_labeling`.
 */
typedef enum NpSearchStatus {
  NP_SEARCH_STATUS_FOUND = 0,
  NP_SEARCH_STATUS_EXHAUSTED = 1,
  NP_SEARCH_STATUS_INCONCLUSIVE = 2,
} NpSearchStatus;

/**
 * Opaque graph handle.
 */
typedef struct NpGraph NpGraph;

/**
 * Opaque labeling handle.
 */
typedef struct NpLabeling NpLabeling;

/**
 * Message for the last failing call on this thread, or NULL. Valid until
 * the next failing call on the same thread.
 */
const char *np_last_error_message(void);

/**
 * Builds a family member from a spec string such as `"gear:4"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum NpStatus np_graph_generate(const char *spec, struct NpGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values (or be NULL when zero);
 * `out` must be writable.
 */
enum NpStatus np_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct NpGraph **out);

/**
 * Parses edge-list text (`n m` header, then `u v` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum NpStatus np_graph_parse_edge_list(const char *text, struct NpGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be freed twice. NULL is ignored.
 */
void np_graph_free(struct NpGraph *g);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t np_graph_vertex_count(const struct NpGraph *g);

/**
 * Number of edges, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t np_graph_edge_count(const struct NpGraph *g);

/**
 * Copies the sorted edges flat into `buf`, which must hold
 * `2 * np_graph_edge_count(g)` values.
 *
 * # Safety
 * `g` must be a live handle; `buf` must hold `len` values.
 */
enum NpStatus np_graph_copy_edges(const struct NpGraph *g, size_t *buf, size_t len);

/**
 * Runs the family's constructive labeler. On success both outputs are set
 * and must be freed by the caller.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; both outputs must be writable.
 */
enum NpStatus np_label_family(const char *spec,
                              struct NpGraph **out_graph,
                              struct NpLabeling **out_labeling);

/**
 * Wraps `labels[0..n]` (label of vertex `v` at index `v - 1`); fails with
 * `LabelingInvalid` unless it is a bijection onto `1..=n`.
 *
 * # Safety
 * `labels` must point to `n` values; `out` must be writable.
 */
enum NpStatus np_labeling_new(const size_t *labels, size_t n, struct NpLabeling **out);

/**
 * # Safety
 * `f` must come from this library and not be freed twice. NULL is ignored.
 */
void np_labeling_free(struct NpLabeling *f);

/**
 * Number of labeled vertices, or 0 for NULL.
 *
 * # Safety
 * `f` must be NULL or a live handle.
 */
size_t np_labeling_len(const struct NpLabeling *f);

/**
 * Label of vertex `v`, or 0 when `f` is NULL or `v` is out of range.
 *
 * # Safety
 * `f` must be NULL or a live handle.
 */
size_t np_labeling_get(const struct NpLabeling *f, size_t v);

/**
 * Copies all labels into `buf` (vertex `v` at index `v - 1`).
 *
 * # Safety
 * `f` must be a live handle; `buf` must hold `len` values.
 */
enum NpStatus np_labeling_copy(const struct NpLabeling *f, size_t *buf, size_t len);

/**
 * Checks `f` against `g`. `out_ok` receives whether every vertex of degree
 * at least 2 has coprime neighbor labels; `out_violations` (optional)
 * receives the number of vertices that do not.
 *
 * # Safety
 * Handles must be live; `out_ok` must be writable; `out_violations` may be NULL.
 */
enum NpStatus np_verify(const struct NpGraph *g,
                        const struct NpLabeling *f,
                        bool *out_ok,
                        size_t *out_violations);

/**
 * Exact search. `budget` caps label assignments (0 = unbounded);
 * `natural_order` visits vertices by id instead of by degree. When the
 * status is `Found`, `*out_labeling` is set and owned by the caller;
 * otherwise it is set to NULL.
 *
 * # Safety
 * `g` must be a live handle; both outputs must be writable.
 */
enum NpStatus np_find_labeling(const struct NpGraph *g,
                               uint64_t budget,
                               bool natural_order,
                               enum NpSearchStatus *out_status,
                               struct NpLabeling **out_labeling);

/**
 * Writes the partner of `x` at `buf[x - 1]` for the smallest coprime
 * matching of `1..=n` into `2n+1..=3n`.
 *
 * # Safety
 * `buf` must hold `len >= n` values.
 */
enum NpStatus np_coprime_matching(size_t n, size_t *buf, size_t len);

/**
 * Smallest prime in `(n, 2n]`, or 0 when `n == 0`.
 */
size_t np_bertrand_prime(size_t n);

#endif  /* NPRIME_H */
