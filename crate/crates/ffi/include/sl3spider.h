#ifndef SL3SPIDER_H
#define SL3SPIDER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpiderStatus {
  SPIDER_STATUS_OK = 0,
  SPIDER_STATUS_NULL_ARGUMENT = 1,
  SPIDER_STATUS_INVALID_INPUT = 2,
  SPIDER_STATUS_BUDGET_EXCEEDED = 3,
  SPIDER_STATUS_INTERNAL = 4,
} SpiderStatus;

/**
 * A parsed tangle diagram.
 */
typedef struct SpiderTangle SpiderTangle;

/**
 * A linear combination of webs.
 */
typedef struct SpiderWebSum SpiderWebSum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Owned by the
 * library and valid until the next call on the same thread.
 */
const char *spider_last_error(void);

void spider_string_free(char *s);

/**
 * Parses the text slice format.
 */
enum SpiderStatus spider_tangle_parse(const char *src, struct SpiderTangle **out);

void spider_tangle_free(struct SpiderTangle *t);

enum SpiderStatus spider_tangle_to_string(const struct SpiderTangle *t, char **out);

enum SpiderStatus spider_tangle_crossings(const struct SpiderTangle *t, size_t *out);

/**
 * Skein evaluation. Jobs over the branch budget are refused unless
 * `force` is set.
 */
enum SpiderStatus spider_evaluate(const struct SpiderTangle *t,
                                  bool force,
                                  struct SpiderWebSum **out);

/**
 * Clasp for a sign word such as `"++-"`.
 */
enum SpiderStatus spider_projector(const char *word, struct SpiderWebSum **out);

void spider_websum_free(struct SpiderWebSum *s);

enum SpiderStatus spider_websum_len(const struct SpiderWebSum *s, size_t *out);

enum SpiderStatus spider_websum_to_json(const struct SpiderWebSum *s, char **out);

/**
 * Colored invariant as JSON; `labels` holds one sign word per component,
 * separated by commas.
 */
enum SpiderStatus spider_colored_json(const struct SpiderTangle *t, const char *labels, char **out);

enum SpiderStatus spider_twist_limit_json(const char *word, size_t kmax, int64_t order, char **out);

/**
 * Gaussian elimination on a serialized complex; `through < 0` means the
 * top degree.
 */
enum SpiderStatus spider_homocalc_simplify_json(const char *complex, int64_t through, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SL3SPIDER_H */
