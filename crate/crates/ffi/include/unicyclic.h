#ifndef UNICYCLIC_H
#define UNICYCLIC_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum UcStatus {
  UC_STATUS_OK = 0,
  UC_STATUS_NULL_POINTER = 1,
  UC_STATUS_INVALID_UTF8 = 2,
  UC_STATUS_PARSE = 3,
  UC_STATUS_INVALID_GRAPH = 4,
  UC_STATUS_DOMAIN = 5,
  UC_STATUS_RANGE = 6,
  UC_STATUS_NOT_UNICYCLIC = 7,
  UC_STATUS_PRECONDITION = 8,
  UC_STATUS_INVALID_SPEC = 9,
  UC_STATUS_BUFFER_TOO_SMALL = 10,
  UC_STATUS_PANIC = 11,
} UcStatus;

/**
 * Opaque audit report handle.
 */
typedef struct UcAuditReport UcAuditReport;

/**
 * Opaque graph handle.
 */
typedef struct UcGraph UcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into this library on the same thread.
 */
const char *uc_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void uc_string_free(char *s);

/**
 * Parses the edge-list text format.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum UcStatus uc_graph_parse(const char *text, struct UcGraph **out);

/**
 * Builds a graph from `edge_count` pairs stored flat in `pairs`.
 *
 * # Safety
 * `pairs` must hold `2 * edge_count` readable values (may be NULL when
 * `edge_count` is 0); `out` must be writable.
 */
enum UcStatus uc_graph_from_edges(size_t n,
                                  const size_t *pairs,
                                  size_t edge_count,
                                  struct UcGraph **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void uc_graph_free(struct UcGraph *g);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t uc_graph_vertex_count(const struct UcGraph *g);

/**
 * Edge count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t uc_graph_edge_count(const struct UcGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum UcStatus uc_graph_is_unicyclic(const struct UcGraph *g, bool *out);

/**
 * Writes the non-increasing degree sequence into `buf`. `len` receives the
 * sequence length even when `cap` is too small.
 *
 * # Safety
 * `buf` must hold `cap` writable values; `len` must be writable.
 */
enum UcStatus uc_graph_degree_sequence(const struct UcGraph *g,
                                       uint32_t *buf,
                                       size_t cap,
                                       size_t *len);

/**
 * Serialises to the edge-list text format.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum UcStatus uc_graph_to_edge_list(const struct UcGraph *g, char **out);

/**
 * Evaluates an index such as "M1", "NK*", "SEI_2" or "M1^-0.5" as a double.
 *
 * # Safety
 * `g` must be a live handle, `spec` a nul-terminated string, `out` writable.
 */
enum UcStatus uc_index_eval(const struct UcGraph *g, const char *spec, double *out);

/**
 * Evaluates an index and returns its exact rendering ("432", "5/2"), or 12
 * significant digits for floating-point values.
 *
 * # Safety
 * `g` must be a live handle, `spec` a nul-terminated string, `out` writable.
 */
enum UcStatus uc_index_eval_exact(const struct UcGraph *g, const char *spec, char **out);

/**
 * Builds the representative of an extremal family: "cycle", "unthree", "H",
 * "K" (param = Δ), "A" or "B" (param = p). `param` is ignored for the first
 * two.
 *
 * # Safety
 * `family` must be a nul-terminated string; `out` must be writable.
 */
enum UcStatus uc_construct(const char *family, size_t n, size_t param, struct UcGraph **out);

/**
 * Audits a unicyclic graph over the default parameter grid.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum UcStatus uc_audit(const struct UcGraph *g, double tolerance, struct UcAuditReport **out);

/**
 * # Safety
 * `r` must come from `uc_audit` and not have been freed.
 */
void uc_audit_free(struct UcAuditReport *r);

/**
 * True when every applicable bound holds and tightness matches membership.
 *
 * # Safety
 * `r` must be a live report; `out` must be writable.
 */
enum UcStatus uc_audit_is_clean(const struct UcAuditReport *r, bool *out);

/**
 * Number of violated bound instances.
 *
 * # Safety
 * `r` must be a live report; `out` must be writable.
 */
enum UcStatus uc_audit_violation_count(const struct UcAuditReport *r, size_t *out);

/**
 * CSV rendering with header.
 *
 * # Safety
 * `r` must be a live report; `out` must be writable.
 */
enum UcStatus uc_audit_to_csv(const struct UcAuditReport *r, char **out);

/**
 * Number of unicyclic graphs on `n` vertices up to isomorphism, `3 <= n <= 9`.
 *
 * # Safety
 * `out` must be writable.
 */
enum UcStatus uc_count_classes(size_t n, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNICYCLIC_H */
