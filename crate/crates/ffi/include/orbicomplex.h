#ifndef ORBICOMPLEX_H
#define ORBICOMPLEX_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Exceptional orbifold families, for [`orb_exceptional_complexity`].
typedef enum OrbKind {
  ORB_KIND_S3 = 0,
  ORB_KIND_S3_CIRCLE = 1,
  ORB_KIND_S3_THETA = 2,
  ORB_KIND_P3_CIRCLE = 3,
  ORB_KIND_L31_CIRCLE = 4,
} OrbKind;

// Result codes.
typedef enum OrbStatus {
  ORB_STATUS_OK = 0,
  ORB_STATUS_NULL_POINTER = 1,
  ORB_STATUS_INVALID_UTF8 = 2,
  ORB_STATUS_PARSE = 3,
  ORB_STATUS_INVALID_TRIANGULATION = 4,
  ORB_STATUS_NOT_AN_ORBIFOLD = 5,
  ORB_STATUS_INVALID_ORDER = 6,
  ORB_STATUS_ORDER_MISMATCH = 7,
  ORB_STATUS_REJECTED = 8,
  ORB_STATUS_INCOMPLETE = 9,
  ORB_STATUS_OUT_OF_RANGE = 10,
  ORB_STATUS_OTHER = 11,
  ORB_STATUS_PANIC = 12,
} OrbStatus;

// Opaque result of splitting into irreducible summands.
typedef struct OrbSplit OrbSplit;

// Opaque decorated triangulation.
typedef struct OrbTriangulation OrbTriangulation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. Valid until the next
// failing call on the same thread.
const char *orb_last_error(void);

// Frees a string returned by this library.
//
// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void orb_string_free(char *s);

// Parses the `.orb` text format.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum OrbStatus orb_tri_parse(const char *text, struct OrbTriangulation **out);

// Decodes an isomorphism signature.
//
// # Safety
// `sig` must be a NUL-terminated string and `out` writable.
enum OrbStatus orb_tri_from_signature(const char *sig, struct OrbTriangulation **out);

// # Safety
// `h` must be NULL or a handle from this library not yet freed.
void orb_tri_free(struct OrbTriangulation *h);

// # Safety
// `h` must be a live handle and `out` writable.
enum OrbStatus orb_tri_tet_count(const struct OrbTriangulation *h, uintptr_t *out);

// Writes the `.orb` text of `h`; free with [`orb_string_free`].
//
// # Safety
// `h` must be a live handle and `out` writable.
enum OrbStatus orb_tri_serialize(const struct OrbTriangulation *h, char **out);

// Writes the isomorphism signature of `h`; free with [`orb_string_free`].
//
// # Safety
// `h` must be a live handle and `out` writable.
enum OrbStatus orb_tri_signature(const struct OrbTriangulation *h, char **out);

// Returns `Ok` when every structural check passes; otherwise the failing check's code.
//
// # Safety
// `h` must be a live handle.
enum OrbStatus orb_tri_validate(const struct OrbTriangulation *h);

// Complexity weight of the dual spine, split into vertex count and singular contribution.
//
// # Safety
// `h` must be a live handle and both outputs writable.
enum OrbStatus orb_complexity_weight(const struct OrbTriangulation *h,
                                     uint64_t *vertex_count,
                                     uint64_t *singular_contribution);

// Closed-form complexity of an exceptional orbifold. Unused orders are ignored.
//
// # Safety
// `out` must be writable.
enum OrbStatus orb_exceptional_complexity(enum OrbKind kind,
                                          uint32_t p,
                                          uint32_t q,
                                          uint32_t r,
                                          uint64_t *out);

// Ordinary connected sum along non-singular balls.
//
// # Safety
// `a` and `b` must be live handles and `out` writable.
enum OrbStatus orb_ordinary_sum(const struct OrbTriangulation *a,
                                const struct OrbTriangulation *b,
                                struct OrbTriangulation **out);

// Splits into irreducible summands; `seed` breaks ties between equal-weight spheres.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum OrbStatus orb_split(const struct OrbTriangulation *h, uint64_t seed, struct OrbSplit **out);

// # Safety
// `s` must be NULL or a split handle not yet freed.
void orb_split_free(struct OrbSplit *s);

// Number of summands, and whether some sphere was left undecided.
//
// # Safety
// `s` must be a live split handle and outputs writable.
enum OrbStatus orb_split_summary(const struct OrbSplit *s, uintptr_t *summands, bool *incomplete);

// Copy of summand `i` as a new triangulation handle.
//
// # Safety
// `s` must be a live split handle and `out` writable.
enum OrbStatus orb_split_summand(const struct OrbSplit *s,
                                 uintptr_t i,
                                 struct OrbTriangulation **out);

// Number of `p`-cyclic sums involving a singular circle.
//
// # Safety
// `s` must be a live split handle and `out` writable.
enum OrbStatus orb_split_nu(const struct OrbSplit *s, uint32_t p, uintptr_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBICOMPLEX_H */
