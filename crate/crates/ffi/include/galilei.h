#ifndef GALILEI_H
#define GALILEI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  GALILEI_STATUS_OK = 0,
  GALILEI_STATUS_NULL_ARGUMENT = 1,
  GALILEI_STATUS_INVALID_ARGUMENT = 2,
  GALILEI_STATUS_COMPUTATION_FAILED = 3,
  GALILEI_STATUS_OUT_OF_RANGE = 4,
  GALILEI_STATUS_PANIC = 5,
} GalileiStatus;

typedef enum {
  GALILEI_METHOD_ENUM = 0,
  GALILEI_METHOD_RECUR = 1,
  GALILEI_METHOD_CLOSED = 2,
} GalileiMethod;

// Truncated power series with rational coefficients.
typedef struct GalileiSeries GalileiSeries;

// Outcome of one acceptance suite.
typedef struct GalileiSuite GalileiSuite;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer stays
// valid until the next call into the library from the same thread.
const char *galilei_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void galilei_string_free(char *s);

// `F^(k)_l` through degree `degree`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
GalileiStatus galilei_series_new(GalileiMethod method,
                                 uint32_t k,
                                 uint32_t l,
                                 size_t degree,
                                 GalileiSeries **out);

// # Safety
// `s` must be null or a handle from [`galilei_series_new`], not yet freed.
void galilei_series_free(GalileiSeries *s);

// Number of stored coefficients (the truncation order plus one).
//
// # Safety
// `s` must be a live series handle and `out` writable.
GalileiStatus galilei_series_len(const GalileiSeries *s, size_t *out);

// Coefficient `i` as a newly allocated string.
//
// # Safety
// `s` must be a live series handle and `out` writable.
GalileiStatus galilei_series_coeff(const GalileiSeries *s, size_t i, char **out);

// Rank of `M_n` evaluated at `x = n`.
//
// # Safety
// `out` must be writable.
GalileiStatus galilei_young_rank(uint32_t n, size_t *out);

// Radical layers of the projective cover of `top` (for example `"V'(0)"`
// or `"V(5)"`), rendered as `"V'(0) / V(4) / ..."`.
//
// # Safety
// `top` must be a nul-terminated string and `out` writable.
GalileiStatus galilei_radical_filtration(const char *top, size_t depth, char **out);

// Runs acceptance suite `id` (1 to 9).
//
// # Safety
// `out` must be writable.
GalileiStatus galilei_suite_run(uint8_t id, bool quick, GalileiSuite **out);

// # Safety
// `s` must be null or a handle from [`galilei_suite_run`], not yet freed.
void galilei_suite_free(GalileiSuite *s);

// Whether every claim of the suite passed.
//
// # Safety
// `s` must be a live suite handle and `out` writable.
GalileiStatus galilei_suite_passed(const GalileiSuite *s, bool *out);

// The suite with its results and verdicts as a JSON document.
//
// # Safety
// `s` must be a live suite handle and `out` writable.
GalileiStatus galilei_suite_json(const GalileiSuite *s, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GALILEI_H */
