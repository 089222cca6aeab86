/* C interface for the tactile-color library. Raised-pattern color encoding: synthesis, rendering, decoding, and session scoring. */

#ifndef TACTILE_COLOR_H
#define TACTILE_COLOR_H

/* Generated by cbindgen from tactile-color-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes for every fallible call. Matches the CLI exit-code classes.
 */
typedef enum TcStatus {
  /**
   * Success.
   */
  TcStatusOk = 0,
  /**
   * Null pointer or out-of-range argument.
   */
  TcStatusInvalidArgument = 1,
  /**
   * Unparseable or malformed input (manifest, session, UTF-8).
   */
  TcStatusParseError = 2,
  /**
   * Input carries no usable hue.
   */
  TcStatusAchromatic = 3,
  /**
   * Synthesis or geometry failure.
   */
  TcStatusSynthesisError = 4,
  /**
   * A piece appears twice in a session.
   */
  TcStatusDuplicatePiece = 5,
} TcStatus;

/**
 * Opaque handle to a synthesized pattern.
 */
typedef struct TcPattern TcPattern;

/**
 * Normalized red/yellow/blue pigment fractions.
 */
typedef struct TcMix {
  double r;
  double y;
  double b;
} TcMix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the underlying tactile-color library, as a static string.
 */
const char *tc_version(void);

/**
 * Message for the most recent failure on this thread. Borrowed; valid until
 * the next failing call on the same thread.
 */
const char *tc_last_error_message(void);

/**
 * Number of wheel hues (always 12).
 */
uint32_t tc_hue_count(void);

/**
 * Static name of the hue at `index` (0..12 clockwise from yellow), or null.
 */
const char *tc_hue_name(uint32_t index);

/**
 * Pigment mix of the hue at `index`.
 *
 * # Safety
 * `out_mix` must point to writable memory for one `TcMix`.
 */
enum TcStatus tc_hue_mix(uint32_t index, struct TcMix *out_mix);

/**
 * Quantizes an RGB color to the nearest wheel hue index.
 *
 * # Safety
 * `out_index` must point to writable memory for one `u32`.
 */
enum TcStatus tc_rgb_to_hue(uint8_t r, uint8_t g, uint8_t b, uint32_t *out_index);

/**
 * Synthesizes the swatch for a wheel hue on a width x height rectangle.
 *
 * # Safety
 * `out` must point to writable memory for one pattern pointer. On success it
 * receives a handle that must be released with [`tc_pattern_free`].
 */
enum TcStatus tc_pattern_from_hue(uint32_t hue_index,
                                  double width_mm,
                                  double height_mm,
                                  struct TcPattern **out);

/**
 * Synthesizes the swatch for an explicit mix (weights are normalized).
 *
 * # Safety
 * See [`tc_pattern_from_hue`].
 */
enum TcStatus tc_pattern_from_mix(struct TcMix mix,
                                  double width_mm,
                                  double height_mm,
                                  struct TcPattern **out);

/**
 * Releases a pattern handle. Null is a no-op.
 *
 * # Safety
 * `pattern` must be a handle from this library, not yet freed.
 */
void tc_pattern_free(struct TcPattern *pattern);

/**
 * Number of raised elements in the pattern; 0 for a null handle.
 *
 * # Safety
 * `pattern` must be a live handle or null.
 */
size_t tc_pattern_element_count(const struct TcPattern *pattern);

/**
 * Renders the pattern as an SVG document string.
 *
 * # Safety
 * `pattern` must be a live handle; `out` receives a string to be released
 * with [`tc_string_free`].
 */
enum TcStatus tc_pattern_svg(const struct TcPattern *pattern, char **out);

/**
 * Serializes the pattern as a JSON manifest string.
 *
 * # Safety
 * See [`tc_pattern_svg`].
 */
enum TcStatus tc_pattern_manifest(const struct TcPattern *pattern, char **out);

/**
 * Rasterizes the pattern as binary PGM bytes at `dpi`.
 *
 * # Safety
 * `pattern` must be a live handle; `out_bytes`/`out_len` receive a buffer to
 * be released with [`tc_bytes_free`].
 */
enum TcStatus tc_pattern_pgm(const struct TcPattern *pattern,
                             uint32_t dpi,
                             uint8_t **out_bytes,
                             size_t *out_len);

/**
 * Decodes the pattern back to its hue index and mix.
 *
 * # Safety
 * `pattern` must be a live handle; `out_hue_index` and `out_mix` must be
 * writable or null (null outputs are skipped).
 */
enum TcStatus tc_pattern_decode(const struct TcPattern *pattern,
                                uint32_t *out_hue_index,
                                struct TcMix *out_mix);

/**
 * Parses a manifest JSON string and decodes it to a hue index and mix.
 *
 * # Safety
 * `manifest_json` must be a NUL-terminated UTF-8 string; outputs as in
 * [`tc_pattern_decode`].
 */
enum TcStatus tc_manifest_decode(const char *manifest_json,
                                 uint32_t *out_hue_index,
                                 struct TcMix *out_mix);

/**
 * Scores a session JSON string against the canonical wheel.
 *
 * # Safety
 * `session_json` must be a NUL-terminated UTF-8 string; `out_n_correct` and
 * `out_placed` must be writable or null.
 */
enum TcStatus tc_score_session(const char *session_json,
                               uint32_t *out_n_correct,
                               uint32_t *out_placed);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void tc_string_free(char *s);

/**
 * Releases a byte buffer returned by this library. Null is a no-op.
 *
 * # Safety
 * `ptr`/`len` must come from this library and not be freed twice.
 */
void tc_bytes_free(uint8_t *ptr, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TACTILE_COLOR_H */
