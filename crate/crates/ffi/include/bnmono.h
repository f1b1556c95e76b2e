#ifndef BNMONO_H
#define BNMONO_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BnmStatus {
  BNM_STATUS_OK = 0,
  BNM_STATUS_NULL_POINTER = 1,
  BNM_STATUS_INVALID_ARGUMENT = 2,
  BNM_STATUS_DIMENSION_MISMATCH = 3,
  BNM_STATUS_SIZE_LIMIT = 4,
  BNM_STATUS_NEGATIVE_LOOP = 5,
  BNM_STATUS_PARSE = 6,
  BNM_STATUS_PANIC = 7,
} BnmStatus;

// Opaque network handle.
typedef struct BnmNetwork BnmNetwork;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. Valid until the next
// failing call on the same thread; never NULL.
const char *bnm_last_error_message(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void bnm_string_free(char *s);

// # Safety
// `network` must be NULL or a handle returned by this library, not yet freed.
void bnm_network_free(struct BnmNetwork *network);

// Parses a network file (`{"n": .., "tables": [..]}`).
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum BnmStatus bnm_network_from_json(const char *json, struct BnmNetwork **out);

// Builds a network from its image table: `images[x]` encodes `f(x)`, and
// `len` must be `2^n`.
//
// # Safety
// `images` must point to `len` readable values; `out` must be writable.
enum BnmStatus bnm_network_from_images(uint32_t n,
                                       const uint32_t *images,
                                       uintptr_t len,
                                       struct BnmNetwork **out);

// Serializes a network to the JSON file format. Free with
// [`bnm_string_free`].
//
// # Safety
// `network` must be a live handle; `out` must be writable.
enum BnmStatus bnm_network_to_json(const struct BnmNetwork *network, char **out);

// Component count, or 0 for a NULL handle.
//
// # Safety
// `network` must be NULL or a live handle.
uint32_t bnm_network_components(const struct BnmNetwork *network);

// # Safety
// `network` must be a live handle; `out` must be writable.
enum BnmStatus bnm_network_evaluate(const struct BnmNetwork *network, uint32_t x, uint32_t *out);

// The Gray-code path network on `n` components.
//
// # Safety
// `out` must be writable.
enum BnmStatus bnm_gray_code_network(uint32_t n, struct BnmNetwork **out);

// The `2n`-component monotone embedding. Fails with
// `BNM_STATUS_NEGATIVE_LOOP` unless `force` is set.
//
// # Safety
// `network` must be a live handle; `out` must be writable.
enum BnmStatus bnm_embed(const struct BnmNetwork *network, bool force, struct BnmNetwork **out);

// # Safety
// `network` must be a live handle; `out` must be writable.
enum BnmStatus bnm_is_monotone(const struct BnmNetwork *network, bool *out);

// # Safety
// `network` must be a live handle; `out` must be writable.
enum BnmStatus bnm_has_negative_loop(const struct BnmNetwork *network, bool *out);

// # Safety
// `network` must be a live handle; `out` must be writable.
enum BnmStatus bnm_has_two_cycle(const struct BnmNetwork *network, bool *out);

// Asynchronous distance from `from` to `to`. `*reachable` is false when no
// path exists, in which case `*distance` is left untouched.
//
// # Safety
// `network` must be a live handle; both outputs must be writable.
enum BnmStatus bnm_distance(const struct BnmNetwork *network,
                            uint32_t from,
                            uint32_t to,
                            bool *reachable,
                            uint64_t *distance);

// # Safety
// `network` must be a live handle; `out` must be writable.
enum BnmStatus bnm_diameter(const struct BnmNetwork *network, uint64_t *out);

// Writes up to `capacity` fixed points into `buffer` in increasing order and
// the total count into `*count`. Call with `capacity = 0` to size the buffer.
//
// # Safety
// `network` must be a live handle; `buffer` must hold `capacity` values
// (may be NULL when `capacity` is 0); `count` must be writable.
enum BnmStatus bnm_fixed_points(const struct BnmNetwork *network,
                                uint32_t *buffer,
                                uintptr_t capacity,
                                uintptr_t *count);

// Runs a verification suite (`robert`, `monotone-reach`, `embedding`,
// `fixed-point-counts` or `all`). `*passed` is false iff some check failed.
// When `report_json` is not NULL it receives the JSON report array, to be
// freed with [`bnm_string_free`].
//
// # Safety
// `network` must be a live handle; `suite` a NUL-terminated string;
// `passed` writable; `report_json` NULL or writable.
enum BnmStatus bnm_verify(const struct BnmNetwork *network,
                          const char *suite,
                          bool *passed,
                          char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BNMONO_H */
