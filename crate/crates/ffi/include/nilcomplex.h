#ifndef NILCOMPLEX_H
#define NILCOMPLEX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NcStatus {
  NC_STATUS_OK = 0,
  NC_STATUS_NULL_POINTER = 1,
  NC_STATUS_INVALID_UTF8 = 2,
  NC_STATUS_PARSE_ERROR = 3,
  NC_STATUS_NOT_NILPOTENT = 4,
  NC_STATUS_ASSUMPTION_VIOLATION = 5,
  NC_STATUS_DIMENSION_MISMATCH = 6,
  NC_STATUS_MISMATCH = 7,
  NC_STATUS_FAILURE = 8,
  NC_STATUS_PANIC = 9,
} NcStatus;

/**
 * A graded complex with `d^N = 0`.
 */
typedef struct NcComplex NcComplex;

/**
 * `(field, q, N)` with its assumption flags.
 */
typedef struct NcContext NcContext;

/**
 * An ungraded module with `d^N = 0`.
 */
typedef struct NcModule NcModule;

/**
 * A table of `dim H^n_(m)` with validity flags.
 */
typedef struct NcTable NcTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the next failing call.
 */
const char *nc_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be NULL.
 */
void nc_string_free(char *s);

/**
 * `field` is `zmod:p` or `cyclotomic:n`; `q` an integer, `a/b` or `zeta^k`.
 *
 * # Safety
 * Strings must be NUL-terminated; `out` must be writable.
 */
enum NcStatus nc_context_new(const char *field,
                             const char *q,
                             size_t order,
                             struct NcContext **out);

/**
 * # Safety
 * `ctx` must be a live handle; `a0`, `a1` writable or NULL.
 */
enum NcStatus nc_context_assumptions(const struct NcContext *ctx, bool *a0, bool *a1);

/**
 * # Safety
 * `ctx` must come from [`nc_context_new`] or be NULL.
 */
void nc_context_free(struct NcContext *ctx);

/**
 * Module `k^dim` with `d` given row-major by integer entries (reduced into the field).
 * Fails with `NC_STATUS_NOT_NILPOTENT` when `d^N != 0`.
 *
 * # Safety
 * `entries` must point to `dim * dim` integers.
 */
enum NcStatus nc_module_new(const struct NcContext *ctx,
                            size_t dim,
                            const int64_t *entries,
                            struct NcModule **out);

/**
 * Writes `dim H_(1), ..., dim H_(N-1)` into `dims`, which holds `len` entries.
 *
 * # Safety
 * `dims` must be writable for `len` entries.
 */
enum NcStatus nc_module_homology_dims(const struct NcModule *module, size_t *dims, size_t len);

/**
 * # Safety
 * `module` must come from [`nc_module_new`] or be NULL.
 */
void nc_module_free(struct NcModule *module);

/**
 * Parses `{"ctx": ..., "lo", "hi", "dims", "d"}`.
 *
 * # Safety
 * `json` must be NUL-terminated; `out` writable.
 */
enum NcStatus nc_complex_from_json(const char *json, struct NcComplex **out);

/**
 * # Safety
 * `complex` must come from [`nc_complex_from_json`] or be NULL.
 */
void nc_complex_free(struct NcComplex *complex);

/**
 * # Safety
 * `complex` must be a live handle; `out` writable.
 */
enum NcStatus nc_complex_homology(const struct NcComplex *complex, struct NcTable **out);

/**
 * Chain homology of `d'_variant` on the simplicial set of a preset complex
 * (`point`, `edge`, `triangle`, `tetrahedron`) up to degree `top`. Cell degrees are `-n`.
 *
 * # Safety
 * `ctx` must be a live handle, `preset` NUL-terminated, `out` writable.
 */
enum NcStatus nc_simplicial_homology(const struct NcContext *ctx,
                                     const char *preset,
                                     size_t variant,
                                     size_t top,
                                     struct NcTable **out);

/**
 * Runs the Hochschild comparison for a preset algebra at index `p`: diagram commutativity,
 * bijectivity of the comparison maps and the dictionary. `NC_STATUS_MISMATCH` lists failures.
 *
 * # Safety
 * `ctx` must be a live handle, `preset` NUL-terminated.
 */
enum NcStatus nc_hochschild_check(const struct NcContext *ctx,
                                  const char *preset,
                                  size_t p,
                                  size_t top);

/**
 * # Safety
 * `table` must be a live handle.
 */
size_t nc_table_len(const struct NcTable *table);

/**
 * Cell `index` as `(level, degree, dim, valid)`.
 *
 * # Safety
 * `table` must be a live handle; outputs writable.
 */
enum NcStatus nc_table_cell(const struct NcTable *table,
                            size_t index,
                            size_t *level,
                            int64_t *degree,
                            size_t *dim,
                            bool *valid);

/**
 * The table as JSON; release with [`nc_string_free`].
 *
 * # Safety
 * `table` must be a live handle; `out` writable.
 */
enum NcStatus nc_table_to_json(const struct NcTable *table, char **out);

/**
 * # Safety
 * `table` must come from this library or be NULL.
 */
void nc_table_free(struct NcTable *table);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NILCOMPLEX_H */
