#ifndef RANKCODES_H
#define RANKCODES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RcStatus {
  RC_STATUS_OK = 0,
  RC_STATUS_NULL_POINTER = 1,
  RC_STATUS_INVALID_ARGUMENT = 2,
  RC_STATUS_FORMAT = 3,
  RC_STATUS_DECODE_FAILURE = 4,
  RC_STATUS_BUFFER_TOO_SMALL = 5,
  RC_STATUS_PANIC = 6,
} RcStatus;

typedef struct RcField RcField;

typedef struct RcFoldedCode RcFoldedCode;

typedef struct RcSolutionSpace RcSolutionSpace;

typedef struct RcSubspace RcSubspace;

typedef struct RcSubspaceCode RcSubspaceCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the calling thread's last failure, or null. Valid until the
// next failing call on this thread.
const char *rc_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, freed once.
void rc_string_free(char *s);

// # Safety
// `p` must be null or a handle from this library, freed once.
void rc_field_free(struct RcField *p);

// # Safety
// `p` must be null or a handle from this library, freed once.
void rc_subspace_code_free(struct RcSubspaceCode *p);

// # Safety
// `p` must be null or a handle from this library, freed once.
void rc_folded_code_free(struct RcFoldedCode *p);

// # Safety
// `p` must be null or a handle from this library, freed once.
void rc_subspace_free(struct RcSubspace *p);

// # Safety
// `p` must be null or a handle from this library, freed once.
void rc_solution_free(struct RcSolutionSpace *p);

// GF((p^e)^m) with the default (lex-first irreducible) moduli.
//
// # Safety
// `out` must be a valid pointer.
enum RcStatus rc_field_new(uint64_t p, size_t e, size_t m, struct RcField **out);

// Field from its JSON descriptor `{p, e, m, modulus}`.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum RcStatus rc_field_from_json(const char *json, struct RcField **out);

// # Safety
// `field` must be a live handle and `out` a valid pointer.
enum RcStatus rc_field_to_json(const struct RcField *field, char **out);

// Number of elements `q^m`; 0 for a null handle.
//
// # Safety
// `field` must be null or a live handle.
uint64_t rc_field_size(const struct RcField *field);

// # Safety
// `field` must be a live handle and `out` a valid pointer.
enum RcStatus rc_field_mul(const struct RcField *field, uint32_t a, uint32_t b, uint32_t *out);

// Subspace code with default evaluation points and `γ`.
//
// # Safety
// `field` must be a live handle and `out` a valid pointer.
enum RcStatus rc_subspace_code_new(const struct RcField *field,
                                   size_t n,
                                   size_t k,
                                   size_t s,
                                   struct RcSubspaceCode **out);

// Ambient dimension `n + sm`; 0 for a null handle.
//
// # Safety
// `code` must be null or a live handle.
size_t rc_subspace_code_ambient_dim(const struct RcSubspaceCode *code);

// # Safety
// `msg` must point to `k` indices; `out` must be a valid pointer.
enum RcStatus rc_subspace_code_encode(const struct RcSubspaceCode *code,
                                      const uint32_t *msg,
                                      size_t k,
                                      struct RcSubspace **out);

// # Safety
// Handles must be live; `out` must be a valid pointer.
enum RcStatus rc_subspace_code_list_decode(const struct RcSubspaceCode *code,
                                           const struct RcSubspace *received,
                                           struct RcSolutionSpace **out);

// Keeps `dim V - rho` dimensions of `v` and adds `t` error dimensions,
// seeded by `seed`.
//
// # Safety
// `v` must be a live handle and `out` a valid pointer.
enum RcStatus rc_operator_channel(const struct RcSubspace *v,
                                  size_t rho,
                                  size_t t,
                                  uint64_t seed,
                                  struct RcSubspace **out);

// # Safety
// `v` must be null or a live handle.
size_t rc_subspace_dim(const struct RcSubspace *v);

// `{"ambient_dim": N, "basis": [[..], ..]}` with RREF rows.
//
// # Safety
// `v` must be a live handle and `out` a valid pointer.
enum RcStatus rc_subspace_to_json(const struct RcSubspace *v, char **out);

// Parses a subspace over the base field of `field`.
//
// # Safety
// `json` must be a NUL-terminated string; other pointers must be valid.
enum RcStatus rc_subspace_from_json(const struct RcField *field,
                                    const char *json,
                                    struct RcSubspace **out);

// # Safety
// `field` must be a live handle and `out` a valid pointer.
enum RcStatus rc_folded_code_new(const struct RcField *field,
                                 size_t n,
                                 size_t k,
                                 size_t h,
                                 size_t s,
                                 struct RcFoldedCode **out);

// Largest guaranteed error rank, or -1. Returns -1 for a null handle.
//
// # Safety
// `code` must be null or a live handle.
int64_t rc_folded_code_max_errors(const struct RcFoldedCode *code);

// Writes the `g*h` codeword entries row-major into `out`.
//
// # Safety
// `msg` must point to `k` indices and `out` to `out_len` writable slots.
enum RcStatus rc_folded_code_encode(const struct RcFoldedCode *code,
                                    const uint32_t *msg,
                                    size_t k,
                                    uint32_t *out,
                                    size_t out_len);

// Adds a uniformly drawn rank-`t` error to the `g*h` entries of `x`.
//
// # Safety
// `x` must point to `len` indices and `out` to `out_len` writable slots.
enum RcStatus rc_rank_error_channel(const struct RcFoldedCode *code,
                                    const uint32_t *x,
                                    size_t len,
                                    size_t t,
                                    uint64_t seed,
                                    uint32_t *out,
                                    size_t out_len);

// # Safety
// `received` must point to `len` indices; `out` must be a valid pointer.
enum RcStatus rc_folded_code_list_decode(const struct RcFoldedCode *code,
                                         const uint32_t *received,
                                         size_t len,
                                         struct RcSolutionSpace **out);

// Affine dimension of the list, or -1 when it is empty.
//
// # Safety
// `sol` must be null or a live handle.
int64_t rc_solution_dim(const struct RcSolutionSpace *sol);

// Sets `*out` to whether the `k`-symbol message lies in the list.
//
// # Safety
// `msg` must point to `k` indices; other pointers must be valid.
enum RcStatus rc_solution_contains(const struct RcSolutionSpace *sol,
                                   const uint32_t *msg,
                                   size_t k,
                                   bool *out);

// `{"k": k, "particular": [..] | null, "basis": [[..], ..]}` with symbols
// as indices; `particular` is null when the list is empty.
//
// # Safety
// `sol` must be a live handle and `out` a valid pointer.
enum RcStatus rc_solution_to_json(const struct RcSolutionSpace *sol, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RANKCODES_H */
