#ifndef MATCHPOLY_H
#define MATCHPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define MP_FAMILY_CHEBYSHEV_U 0

#define MP_FAMILY_CHEBYSHEV_T 1

#define MP_FAMILY_HERMITE 2

#define MP_FAMILY_LAGUERRE 3

#define MP_GRAPH_PATH 0

#define MP_GRAPH_CYCLE 1

#define MP_GRAPH_COMPLETE 2

#define MP_GRAPH_BIPARTITE 3

#define MP_METHOD_CLOSED 0

#define MP_METHOD_PATHS 1

#define MP_METHOD_ENUMERATE 2

#define MP_CHECK_RECURRENCE 0

#define MP_CHECK_ORTHOGONALITY 1

#define MP_CHECK_INVOLUTION 2

#define MP_CHECK_BIJECTION 3

#define MP_CHECK_GF 4

#define MP_CHECK_ALL 5

// Status codes.
typedef enum MpStatus {
  MP_STATUS_OK = 0,
  MP_STATUS_NULL_POINTER = 1,
  MP_STATUS_INVALID_ARGUMENT = 2,
  MP_STATUS_BOUND_EXCEEDED = 3,
  MP_STATUS_INDEX_OUT_OF_RANGE = 4,
  MP_STATUS_INTERNAL = 5,
} MpStatus;

// Opaque handle to `P_0 ..= P_n` of one family.
typedef struct MpSequence MpSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// Valid until the next call on the same thread.
const char *mp_last_error(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void mp_string_free(char *s);

// Generate `P_0 ..= P_n_max` for `family` at order `t`.
//
// # Safety
// `out` must be a valid pointer.
enum MpStatus mp_sequence_generate(uint32_t family_code,
                                   uint32_t t,
                                   size_t n_max,
                                   struct MpSequence **out);

// Number of polynomials in the sequence, 0 for null.
//
// # Safety
// `seq` must be null or a live handle.
size_t mp_sequence_len(const struct MpSequence *seq);

// Degree of `P_index`.
//
// # Safety
// `seq` must be a live handle and `out` a valid pointer.
enum MpStatus mp_sequence_degree(const struct MpSequence *seq, size_t index, size_t *out);

// Coefficient of `x^power` in `P_index` as a decimal string.
//
// # Safety
// `seq` must be a live handle and `out` a valid pointer.
enum MpStatus mp_sequence_coefficient(const struct MpSequence *seq,
                                      size_t index,
                                      size_t power,
                                      char **out);

// `P_index` rendered as text, e.g. `x^2 - 1`.
//
// # Safety
// `seq` must be a live handle and `out` a valid pointer.
enum MpStatus mp_sequence_text(const struct MpSequence *seq, size_t index, char **out);

// Release a sequence. Null is ignored.
//
// # Safety
// `seq` must come from [`mp_sequence_generate`] and not be freed twice.
void mp_sequence_free(struct MpSequence *seq);

// Moment `mu_n` computed by `method`.
//
// # Safety
// `out` must be a valid pointer.
enum MpStatus mp_moment(uint32_t family_code, uint32_t t, size_t n, uint32_t method, char **out);

// Number of coverings of a host graph by t-paths.
//
// # Safety
// `out` must be a valid pointer.
enum MpStatus mp_count_coverings(uint32_t graph,
                                 size_t n,
                                 uint32_t t,
                                 bool complete_only,
                                 char **out);

// Fuss-Catalan number `C(n, t)`.
//
// # Safety
// `out` must be a valid pointer.
enum MpStatus mp_fuss_catalan(uint64_t n, uint64_t t, char **out);

// Run a verification suite and return its report as JSON. A negative
// `trunc` selects the per-identity default truncation.
//
// # Safety
// `out_json` and `out_passed` must be valid pointers.
enum MpStatus mp_verify(uint32_t check,
                        uint32_t t,
                        size_t bound,
                        int64_t trunc,
                        char **out_json,
                        bool *out_passed);

// Library version as a static string.
const char *mp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATCHPOLY_H */
