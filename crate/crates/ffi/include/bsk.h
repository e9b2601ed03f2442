#ifndef BSK_H
#define BSK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BskRepType {
  BSK_REP_TYPE_FINITE = 0,
  BSK_REP_TYPE_TAME = 1,
  BSK_REP_TYPE_WILD = 2,
} BskRepType;

typedef enum BskStatus {
  BSK_STATUS_OK = 0,
  BSK_STATUS_NULL_POINTER = 1,
  BSK_STATUS_INVALID_ARGUMENT = 2,
  BSK_STATUS_SCALE_CAP = 3,
  BSK_STATUS_CHECK_FAILED = 4,
  BSK_STATUS_INTERNAL = 5,
} BskStatus;

/**
 * A structure-constant algebra.
 */
typedef struct BskAlgebra BskAlgebra;

/**
 * A finite poset.
 */
typedef struct BskPoset BskPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread; valid until the next call
 * that fails. Never null.
 */
const char *bsk_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void bsk_string_free(char *s);

/**
 * Builds `S⁺(n,r)` (or `S(n,r)` when `full` is true) in characteristic `p`,
 * under the default scale cap.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BskStatus bsk_algebra_new(size_t n,
                               size_t r,
                               uint64_t p,
                               bool full,
                               struct BskAlgebra **out_alg);

/**
 * # Safety
 * `alg` must be null or a handle from [`bsk_algebra_new`], not yet freed.
 */
void bsk_algebra_free(struct BskAlgebra *alg);

/**
 * # Safety
 * Pointers must be valid.
 */
enum BskStatus bsk_algebra_dim(const struct BskAlgebra *alg, size_t *dim);

/**
 * Basis index of `ξ_{i,j}`, with multi-indices written as digit strings.
 *
 * # Safety
 * Pointers must be valid; `i` and `j` must be nul-terminated.
 */
enum BskStatus bsk_algebra_index_of(const struct BskAlgebra *alg,
                                    const char *i,
                                    const char *j,
                                    size_t *index);

/**
 * Label of basis element `k` as a new string.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BskStatus bsk_algebra_label(const struct BskAlgebra *alg, size_t k, char **label);

/**
 * Writes the coordinates of `b_h · b_l` into `coefs[0..dim]`, reduced to
 * `0 ≤ c < p` when `p > 0`.
 *
 * # Safety
 * `coefs` must point to at least `len` writable values.
 */
enum BskStatus bsk_algebra_product(const struct BskAlgebra *alg,
                                   size_t h,
                                   size_t l,
                                   int64_t *coefs,
                                   size_t len);

/**
 * Checks associativity on all composable basis triples.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BskStatus bsk_algebra_check_associativity(const struct BskAlgebra *alg, size_t *triples);

/**
 * Ext-quiver and relations as a JSON string.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BskStatus bsk_algebra_quiver_json(const struct BskAlgebra *alg, char **json);

/**
 * # Safety
 * `rep_type` must be valid.
 */
enum BskStatus bsk_classify(size_t n, size_t r, uint64_t p, enum BskRepType *rep_type);

/**
 * Verdict with its evidence trail as a JSON string.
 *
 * # Safety
 * `json` must be valid.
 */
enum BskStatus bsk_evidence_json(size_t n, size_t r, uint64_t p, char **json);

/**
 * Parses `{"elements": [...], "covers": [[lo, hi], ...]}`.
 *
 * # Safety
 * `json` must be nul-terminated and `out_poset` valid.
 */
enum BskStatus bsk_poset_from_json(const char *json, struct BskPoset **out_poset);

/**
 * The bundled poset `Γ_M`.
 *
 * # Safety
 * `out_poset` must be valid.
 */
enum BskStatus bsk_poset_gamma_m(struct BskPoset **out_poset);

/**
 * # Safety
 * `poset` must be null or a live handle.
 */
void bsk_poset_free(struct BskPoset *poset);

/**
 * # Safety
 * Pointers must be valid.
 */
enum BskStatus bsk_poset_len(const struct BskPoset *poset, size_t *len);

/**
 * # Safety
 * Pointers must be valid.
 */
enum BskStatus bsk_poset_width(const struct BskPoset *poset, size_t *w);

/**
 * Whether the poset contains one of Nazarova's six minimal wild posets.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BskStatus bsk_poset_nazarova_wild(const struct BskPoset *poset, bool *wild);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BSK_H */
