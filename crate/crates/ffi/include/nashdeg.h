#ifndef NASHDEG_H
#define NASHDEG_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NashdegStatus {
  NASHDEG_STATUS_OK = 0,
  NASHDEG_STATUS_NULL_ARGUMENT = 1,
  NASHDEG_STATUS_UTF8 = 2,
  NASHDEG_STATUS_PARSE = 3,
  NASHDEG_STATUS_INVALID_ARGUMENT = 4,
  NASHDEG_STATUS_DEGENERATE = 5,
  NASHDEG_STATUS_BUDGET_EXHAUSTED = 6,
  NASHDEG_STATUS_INTERNAL = 7,
  NASHDEG_STATUS_PANIC = 8,
} NashdegStatus;

/**
 * Opaque synthesized-instance handle; release with `nashdeg_bundle_free`.
 */
typedef struct NashdegBundle NashdegBundle;

/**
 * Synthesis parameters. `magnitude` is a rational string such as "1/8";
 * a null pointer selects the default.
 */
typedef struct NashdegConfig {
  uint32_t n;
  uint64_t seed;
  const char *magnitude;
  uint64_t denom_bound;
  uint32_t max_resamples;
  uint32_t tol_bits;
  uint32_t prime_budget;
  bool density_repair;
  bool allow_large;
} NashdegConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failing call on this thread, or null. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *nashdeg_last_error(void);

const char *nashdeg_version(void);

/**
 * # Safety
 * `s` must be null or a string previously returned by this library through
 * an out-parameter, not yet freed.
 */
void nashdeg_string_free(char *s);

struct NashdegConfig nashdeg_config_default(uint32_t n, uint64_t seed);

/**
 * # Safety
 * `cfg` must point to a valid config whose `magnitude` is null or a valid
 * NUL-terminated string; `out` must point to writable pointer storage.
 */
enum NashdegStatus nashdeg_synthesize(const struct NashdegConfig *cfg, struct NashdegBundle **out);

/**
 * # Safety
 * `b` must be null or a bundle returned by `nashdeg_synthesize`, not yet
 * freed.
 */
void nashdeg_bundle_free(struct NashdegBundle *b);

/**
 * # Safety
 * `b` must be a live bundle handle.
 */
bool nashdeg_bundle_passes(const struct NashdegBundle *b);

/**
 * Eliminant degree of one player's equilibrium coordinate, 0-based player.
 *
 * # Safety
 * `b` must be a live bundle handle and `out` writable.
 */
enum NashdegStatus nashdeg_bundle_eliminant_degree(const struct NashdegBundle *b,
                                                   uint32_t player,
                                                   uint64_t *out);

/**
 * Serializes a bundle to compact JSON.
 *
 * # Safety
 * `b` must be a live bundle handle and `out` writable.
 */
enum NashdegStatus nashdeg_bundle_to_json(const struct NashdegBundle *b, char **out);

/**
 * Verifies a game given as JSON text (game, tensor, or bundle layout).
 * `passed` reports whether the certificate holds; `report_json` may be null
 * when the report is not wanted.
 *
 * # Safety
 * `game_json` must be a valid NUL-terminated string; `passed` must be
 * writable; `report_json` must be null or writable.
 */
enum NashdegStatus nashdeg_verify(const char *game_json,
                                  uint32_t tol_bits,
                                  uint32_t prime_budget,
                                  bool *passed,
                                  char **report_json);

/**
 * Enumerates Nash equilibria of a game given as JSON text; the report is
 * returned as JSON.
 *
 * # Safety
 * `game_json` must be a valid NUL-terminated string and `report_json`
 * writable.
 */
enum NashdegStatus nashdeg_enumerate(const char *game_json, uint32_t tol_bits, char **report_json);

/**
 * Density, irreducibility, and Galois certification of one integer
 * polynomial given as a JSON coefficient array. `passed` means dense,
 * irreducible, and certified full symmetric at once.
 *
 * # Safety
 * `poly_json` must be a valid NUL-terminated string; `passed` must be
 * writable; `report_json` must be null or writable.
 */
enum NashdegStatus nashdeg_galois(const char *poly_json,
                                  uint32_t prime_budget,
                                  bool *passed,
                                  char **report_json);

/**
 * Mixed volume of the equilibrium system's Newton polytopes for n players.
 *
 * # Safety
 * `out` must be writable.
 */
enum NashdegStatus nashdeg_mixed_volume(uint32_t n, uint64_t *out);

/**
 * Derangement number !n.
 *
 * # Safety
 * `out` must be writable.
 */
enum NashdegStatus nashdeg_derangement(uint32_t n, uint64_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* NASHDEG_H */
