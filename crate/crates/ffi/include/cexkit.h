#ifndef CEXKIT_H
#define CEXKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CexStatus {
  CEX_STATUS_OK = 0,
  CEX_STATUS_NULL_POINTER = 1,
  CEX_STATUS_INVALID_UTF8 = 2,
  CEX_STATUS_PARSE = 3,
  CEX_STATUS_DIMENSION = 4,
  CEX_STATUS_INVALID_SPEC = 5,
  CEX_STATUS_NOT_COCYCLE = 6,
  CEX_STATUS_SINGULAR = 7,
  CEX_STATUS_ZERO_ANNIHILATOR = 8,
  CEX_STATUS_GUARD = 9,
  CEX_STATUS_UNSUPPORTED = 10,
  CEX_STATUS_IO = 11,
  CEX_STATUS_ALGEBRA = 12,
  CEX_STATUS_PANIC = 13,
} CexStatus;

/**
 * Structure-constant algebra.
 */
typedef struct CexAlgebra CexAlgebra;

/**
 * Tuple of bilinear forms `θ = (θ_1, ..., θ_s)`.
 */
typedef struct CexCocycle CexCocycle;

/**
 * Rational matrix.
 */
typedef struct CexMatrix CexMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *cex_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *cex_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed; NULL is ignored.
 */
void cex_string_free(char *s);

/**
 * Catalog member such as `mu1_2:7` or `mu2_2:6:alpha=1/2`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a writable pointer.
 */
enum CexStatus cex_algebra_from_spec(const char *spec, struct CexAlgebra **out);

/**
 * Parses the algebra text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum CexStatus cex_algebra_from_text(const char *text, struct CexAlgebra **out);

/**
 * Canonical text form; release with `cex_string_free`.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum CexStatus cex_algebra_to_text(const struct CexAlgebra *a, char **out);

/**
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum CexStatus cex_algebra_dim(const struct CexAlgebra *a, size_t *out);

/**
 * Whether the product is associative.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum CexStatus cex_algebra_is_associative(const struct CexAlgebra *a, bool *out);

/**
 * # Safety
 * `a` must come from this library and not have been freed; NULL is ignored.
 */
void cex_algebra_free(struct CexAlgebra *a);

/**
 * `dim Z²`, `dim B²`, `dim H²`.
 *
 * # Safety
 * `a` must be a live handle and the outputs writable pointers.
 */
enum CexStatus cex_cohomology_dims(const struct CexAlgebra *a, size_t *z2, size_t *b2, size_t *h2);

/**
 * The `H²` basis representatives as one cocycle with `dim H²` components.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum CexStatus cex_h2_representatives(const struct CexAlgebra *a, struct CexCocycle **out);

/**
 * Parses the cocycle text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum CexStatus cex_cocycle_from_text(const char *text, struct CexCocycle **out);

/**
 * Canonical text form; release with `cex_string_free`.
 *
 * # Safety
 * `c` must be a live handle and `out` a writable pointer.
 */
enum CexStatus cex_cocycle_to_text(const struct CexCocycle *c, char **out);

/**
 * # Safety
 * `c` must come from this library and not have been freed; NULL is ignored.
 */
void cex_cocycle_free(struct CexCocycle *c);

/**
 * Central extension `A_θ`.
 *
 * # Safety
 * `a` and `theta` must be live handles and `out` a writable pointer.
 */
enum CexStatus cex_central_extend(const struct CexAlgebra *a,
                                  const struct CexCocycle *theta,
                                  struct CexAlgebra **out);

/**
 * Splits `b` as `A'_θ` with `A' = b / Ann(b)`; `witness` maps `b` onto `A'_θ`.
 *
 * # Safety
 * `b` must be a live handle and the outputs writable pointers.
 */
enum CexStatus cex_reconstruct(const struct CexAlgebra *b,
                               struct CexAlgebra **a_prime,
                               struct CexCocycle **theta,
                               struct CexMatrix **witness);

/**
 * Parses the matrix text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum CexStatus cex_matrix_from_text(const char *text, struct CexMatrix **out);

/**
 * Canonical text form; release with `cex_string_free`.
 *
 * # Safety
 * `m` must be a live handle and `out` a writable pointer.
 */
enum CexStatus cex_matrix_to_text(const struct CexMatrix *m, char **out);

/**
 * # Safety
 * `m` must come from this library and not have been freed; NULL is ignored.
 */
void cex_matrix_free(struct CexMatrix *m);

/**
 * Whether `m` (column `j` = image of `e_j`) is an isomorphism `a → b`.
 *
 * # Safety
 * `a`, `b`, `m` must be live handles and `out` a writable pointer.
 */
enum CexStatus cex_is_iso_witness(const struct CexAlgebra *a,
                                  const struct CexAlgebra *b,
                                  const struct CexMatrix *m,
                                  bool *out);

/**
 * Fingerprint as a JSON object; release with `cex_string_free`.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum CexStatus cex_fingerprint_json(const struct CexAlgebra *a, char **out);

/**
 * Exhaustive isomorphism search over `F_p` (dim ≤ 5, p ∈ {2, 3}).
 * `found` is set to whether an isomorphism exists.
 *
 * # Safety
 * `a`, `b` must be live handles and `found` a writable pointer.
 */
enum CexStatus cex_iso_search(const struct CexAlgebra *a,
                              const struct CexAlgebra *b,
                              uint64_t p,
                              bool *found);

/**
 * Whether the symbolic automorphism action of `family` (e.g. `mu1_3`) at
 * dimension `n` equals the stated formula.
 *
 * # Safety
 * `family` must be a NUL-terminated string and `passed` a writable pointer.
 */
enum CexStatus cex_verify_action(const char *family, size_t n, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CEXKIT_H */
