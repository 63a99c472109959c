#ifndef LIEDER_H
#define LIEDER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every exported function.
typedef enum LiederStatus {
  LIEDER_STATUS_OK = 0,
  LIEDER_STATUS_NULL_POINTER = 1,
  LIEDER_STATUS_INVALID_UTF8 = 2,
  LIEDER_STATUS_PARSE = 3,
  LIEDER_STATUS_INVALID_ALGEBRA = 4,
  LIEDER_STATUS_INVALID_PARAMETER = 5,
  LIEDER_STATUS_DIMENSION_MISMATCH = 6,
  LIEDER_STATUS_NOT_SCHRODINGER = 7,
  LIEDER_STATUS_PRECONDITION = 8,
  LIEDER_STATUS_JACOBI_VIOLATION = 9,
  LIEDER_STATUS_IO = 10,
  LIEDER_STATUS_PANIC = 11,
} LiederStatus;

// A Lie algebra given by structure constants.
typedef struct LiederAlgebra LiederAlgebra;

// The derivation space of an algebra.
typedef struct LiederDerSpace LiederDerSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *lieder_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void lieder_string_free(char *s);

// Builds the Schrödinger algebra `s_n`.
//
// # Safety
// `out` must be a valid pointer.
enum LiederStatus lieder_algebra_schrodinger(uintptr_t n, struct LiederAlgebra **out);

// Parses an algebra file (`{"dim", "labels", "brackets"}`).
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum LiederStatus lieder_algebra_from_json(const char *json,
                                           bool skip_jacobi,
                                           struct LiederAlgebra **out);

// # Safety
// `alg` must be a handle from this library or null.
void lieder_algebra_free(struct LiederAlgebra *alg);

// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum LiederStatus lieder_algebra_dim(const struct LiederAlgebra *alg, uintptr_t *out);

// Number of basis triples on which the Jacobi identity fails.
//
// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum LiederStatus lieder_algebra_jacobi_violations(const struct LiederAlgebra *alg, uintptr_t *out);

// Serializes the algebra in file format.
//
// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum LiederStatus lieder_algebra_to_json(const struct LiederAlgebra *alg, char **out);

// Computes `Der(L)`.
//
// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum LiederStatus lieder_der_compute(const struct LiederAlgebra *alg, struct LiederDerSpace **out);

// # Safety
// `der` must be a handle from this library or null.
void lieder_der_free(struct LiederDerSpace *der);

// # Safety
// `der` must be a live handle and `out` a valid pointer.
enum LiederStatus lieder_der_dim(const struct LiederDerSpace *der, uintptr_t *out);

// Report on `Der(s_n) = Inn(s_n) ⊕ named outer derivations`, as JSON.
//
// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum LiederStatus lieder_der_verify_theorem(const struct LiederAlgebra *alg, char **out);

// Whether the map (`{"dim", "matrix"}` JSON) is a derivation.
//
// # Safety
// `alg` must be a live handle, `map_json` a NUL-terminated string and
// `out` a valid pointer.
enum LiederStatus lieder_is_derivation(const struct LiederAlgebra *alg,
                                       const char *map_json,
                                       bool *out);

// Local-derivation classification report as JSON.
//
// # Safety
// `alg` and `der` must be live handles for the same algebra and `out` a
// valid pointer.
enum LiederStatus lieder_locder_classify(const struct LiederAlgebra *alg,
                                         const struct LiederDerSpace *der,
                                         uint64_t seed,
                                         uintptr_t stabilization_window,
                                         uintptr_t max_samples,
                                         char **out);

// Replay trace for a map on `s_n`, as JSON.
//
// # Safety
// `alg` and `der` must be live handles for the same algebra, `map_json` a
// NUL-terminated string and `out` a valid pointer.
enum LiederStatus lieder_replay(const struct LiederAlgebra *alg,
                                const struct LiederDerSpace *der,
                                const char *map_json,
                                char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEDER_H */
