#ifndef TURAN_H
#define TURAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TuranStatus {
  TURAN_STATUS_OK = 0,
  TURAN_STATUS_NULL_POINTER = 1,
  TURAN_STATUS_INVALID_UTF8 = 2,
  // Malformed graph6, pattern or construction string.
  TURAN_STATUS_PARSE = 3,
  // An argument is outside its documented range.
  TURAN_STATUS_RANGE = 4,
  // A construction was asked for an impossible parity combination.
  TURAN_STATUS_PARITY = 5,
  // The exhaustive search lies outside the feasibility envelope.
  TURAN_STATUS_INFEASIBLE = 6,
  TURAN_STATUS_OVERFLOW = 7,
  // An internal error; the message holds the panic payload.
  TURAN_STATUS_INTERNAL = 8,
} TuranStatus;

// Opaque graph handle.
typedef struct TuranGraph TuranGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call into the library.
const char *turan_last_error(void);

// Decodes a graph6 string into a new handle.
//
// # Safety
// `code` must be a NUL-terminated string and `out` a valid pointer.
enum TuranStatus turan_graph_from_graph6(const char *code, struct TuranGraph **out);

// Builds a graph from a construction spec such as `g5:p=4`.
//
// # Safety
// `spec` must be a NUL-terminated string and `out` a valid pointer.
enum TuranStatus turan_graph_construct(const char *spec, struct TuranGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from this library and not have been freed.
void turan_graph_free(struct TuranGraph *g);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t turan_graph_order(const struct TuranGraph *g);

// Number of edges, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t turan_graph_size(const struct TuranGraph *g);

// graph6 of the graph as labelled; free with `turan_string_free`.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum TuranStatus turan_graph_to_graph6(const struct TuranGraph *g, char **out);

// graph6 of the canonical form; equal strings mean isomorphic graphs.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum TuranStatus turan_graph_canonical_graph6(const struct TuranGraph *g, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void turan_string_free(char *s);

// Number of copies of `pattern` (for example `b:4` or `c4`) in `g`.
//
// # Safety
// `g` must be a live handle, `pattern` NUL-terminated, `out` valid.
enum TuranStatus turan_count(const struct TuranGraph *g, const char *pattern, uint64_t *out);

// Turán number `ex(n, patterns)` by exhaustive search. `patterns` is a
// single pattern or `family:a,b,...`.
//
// # Safety
// `patterns` must be NUL-terminated and `out` valid.
enum TuranStatus turan_ex(size_t n,
                          const char *patterns,
                          size_t jobs,
                          bool override_envelope,
                          size_t *out);

// Minimum copies of `pattern` over graphs of order `n` and size `e`, by
// exhaustive search. `witness`, when not null, receives one minimiser.
//
// # Safety
// `pattern` must be NUL-terminated, `out` valid, `witness` null or valid.
enum TuranStatus turan_min_copies(size_t n,
                                  size_t e,
                                  const char *pattern,
                                  size_t jobs,
                                  bool override_envelope,
                                  uint64_t *out,
                                  struct TuranGraph **witness);

// Annealing search for a graph of order `n` and size `e` with few copies of
// `pattern`. The count is an upper bound only. Zero `steps` or `restarts`
// keep the library defaults.
//
// # Safety
// `pattern` must be NUL-terminated, `out` valid, `witness` null or valid.
enum TuranStatus turan_witness_search(size_t n,
                                      size_t e,
                                      const char *pattern,
                                      uint64_t seed,
                                      uint64_t steps,
                                      uint32_t restarts,
                                      size_t jobs,
                                      uint64_t *out,
                                      struct TuranGraph **witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TURAN_H */
