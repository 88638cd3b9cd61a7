#ifndef APPROXQUASI_H
#define APPROXQUASI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AqDistance {
  AQ_DISTANCE_HAMMING = 0,
  AQ_DISTANCE_LEVENSHTEIN = 1,
  /**
   * Weighted edit distance; needs a penalty handle.
   */
  AQ_DISTANCE_EDIT = 2,
} AqDistance;

typedef enum AqStatus {
  AQ_STATUS_OK = 0,
  AQ_STATUS_NULL_POINTER = 1,
  /**
   * Malformed text, penalty file or UTF-8.
   */
  AQ_STATUS_INVALID_INPUT = 2,
  /**
   * An argument is out of range or inconsistent with another.
   */
  AQ_STATUS_INVALID_ARGUMENT = 3,
  /**
   * An exhaustive search would exceed its budget.
   */
  AQ_STATUS_BUDGET_EXCEEDED = 4,
  /**
   * The output buffer is too short; the required length was written.
   */
  AQ_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * Internal error; the library state is unaffected.
   */
  AQ_STATUS_PANIC = 6,
} AqStatus;

typedef enum AqVariant {
  AQ_VARIANT_COVER = 0,
  AQ_VARIANT_SEED = 1,
} AqVariant;

/**
 * k-coverage of every factor of a text.
 */
typedef struct AqCoverage AqCoverage;

/**
 * A validated penalty matrix, with the alphabet of its file if it was
 * parsed from one.
 */
typedef struct AqPenalty AqPenalty;

/**
 * An encoded input string.
 */
typedef struct AqText AqText;

/**
 * Minimal thresholds of the distinct candidate factors.
 */
typedef struct AqThresholds AqThresholds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until
 * the next failing call on the same thread.
 */
const char *aq_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *aq_version(void);

/**
 * Encodes `bytes` over the alphabet of its own distinct bytes; `wildcard`
 * marks the wildcard symbol.
 *
 * # Safety
 * `bytes` must point to `len` readable bytes (or be NULL with `len` 0) and
 * `out` must be writable.
 */
enum AqStatus aq_text_new(const uint8_t *bytes, size_t len, uint8_t wildcard, struct AqText **out);

/**
 * Encodes `bytes` over the alphabet of a parsed penalty file.
 *
 * # Safety
 * As [`aq_text_new`]; `penalty` must be a live handle.
 */
enum AqStatus aq_text_new_for(const struct AqPenalty *penalty,
                              const uint8_t *bytes,
                              size_t len,
                              struct AqText **out);

/**
 * Number of symbols of `text` (0 for NULL).
 *
 * # Safety
 * `text` must be NULL or a live handle.
 */
size_t aq_text_len(const struct AqText *text);

/**
 * Alphabet size of `text` (0 for NULL).
 *
 * # Safety
 * `text` must be NULL or a live handle.
 */
size_t aq_text_sigma(const struct AqText *text);

/**
 * # Safety
 * `text` must be NULL or a handle not yet freed.
 */
void aq_text_free(struct AqText *text);

/**
 * Unit costs over `sigma` symbols.
 *
 * # Safety
 * `out` must be writable.
 */
enum AqStatus aq_penalty_unit(size_t sigma, struct AqPenalty **out);

/**
 * Parses a TOML penalty file (`alphabet`, `substitution`, `insertion`,
 * `deletion`) and checks the metric axioms.
 *
 * # Safety
 * `source` must be a NUL-terminated string and `out` writable.
 */
enum AqStatus aq_penalty_parse(const char *source, uint8_t wildcard, struct AqPenalty **out);

/**
 * # Safety
 * `penalty` must be NULL or a handle not yet freed.
 */
void aq_penalty_free(struct AqPenalty *penalty);

/**
 * Hamming k-coverage of every prefix: `out[l]` for `l = 0..=n`. Needs
 * `out_len ≥ n + 1`; otherwise writes `n + 1` to `*needed` and returns
 * `BufferTooSmall`.
 *
 * # Safety
 * `text` must be live; `out` must hold `out_len` entries; `needed` may be
 * NULL.
 */
enum AqStatus aq_prefix_coverage(const struct AqText *text,
                                 uint32_t k,
                                 size_t *out,
                                 size_t out_len,
                                 size_t *needed);

/**
 * k-coverage of every factor under `distance`; `penalty` is read only for
 * `AQ_DISTANCE_EDIT`.
 *
 * # Safety
 * `text` must be live, `penalty` live or NULL, `out` writable.
 */
enum AqStatus aq_factor_coverage(const struct AqText *text,
                                 enum AqDistance distance,
                                 const struct AqPenalty *penalty,
                                 int64_t k,
                                 struct AqCoverage **out);

/**
 * Coverage of the factor `[a, b]`.
 *
 * # Safety
 * `coverage` must be live and `out` writable.
 */
enum AqStatus aq_coverage_get(const struct AqCoverage *coverage, size_t a, size_t b, size_t *out);

/**
 * # Safety
 * `coverage` must be NULL or a handle not yet freed.
 */
void aq_coverage_free(struct AqCoverage *coverage);

/**
 * Restricted covers or seeds. Under Hamming distance thresholds up to `k`
 * are searched; under the edit distances `k` is ignored and exact minimal
 * thresholds are reported.
 *
 * # Safety
 * `text` must be live, `penalty` live or NULL, `out` writable.
 */
enum AqStatus aq_restricted(const struct AqText *text,
                            enum AqVariant variant,
                            enum AqDistance distance,
                            const struct AqPenalty *penalty,
                            uint32_t k,
                            struct AqThresholds **out);

/**
 * Number of distinct candidate factors (0 for NULL).
 *
 * # Safety
 * `report` must be NULL or live.
 */
size_t aq_thresholds_len(const struct AqThresholds *report);

/**
 * Entry `i`: leftmost occurrence `[start, end]` and threshold (−1 when
 * none was found).
 *
 * # Safety
 * `report` must be live; the out pointers writable.
 */
enum AqStatus aq_thresholds_entry(const struct AqThresholds *report,
                                  size_t i,
                                  size_t *start,
                                  size_t *end,
                                  int64_t *threshold);

/**
 * Least threshold over all entries, or −1.
 *
 * # Safety
 * `report` must be NULL or live.
 */
int64_t aq_thresholds_minimal(const struct AqThresholds *report);

/**
 * # Safety
 * `report` must be NULL or a handle not yet freed.
 */
void aq_thresholds_free(struct AqThresholds *report);

/**
 * Hamming enhanced cover. `approx_border` selects k-approximate borders
 * instead of exact ones. `*found` is false when there is no candidate.
 *
 * # Safety
 * `text` must be live; the out pointers writable.
 */
enum AqStatus aq_enhanced_cover(const struct AqText *text,
                                uint32_t k,
                                bool approx_border,
                                bool *found,
                                size_t *start,
                                size_t *len,
                                size_t *coverage);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* APPROXQUASI_H */
