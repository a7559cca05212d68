#ifndef HOPFFORGE_H
#define HOPFFORGE_H

/* Generated by cbindgen from hopfforge-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum HfStatus {
  /**
   * The call succeeded.
   */
  HF_STATUS_OK = 0,
  /**
   * A pointer was null, a string was not UTF-8, or a name was unknown.
   */
  HF_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The document or an option failed to parse or build.
   */
  HF_STATUS_INPUT_ERROR = 2,
  /**
   * An internal invariant failed; the library state is still usable.
   */
  HF_STATUS_INTERNAL = 3,
} HfStatus;

/**
 * Opaque handle: the outcome of one verification run.
 */
typedef struct HfReport HfReport;

/**
 * Opaque handle: a parsed document or builtin catalog entry together with
 * everything it declares.
 */
typedef struct HfWorkspace HfWorkspace;

/**
 * Run parameters.  Obtain defaults from `hf_run_options_default` and
 * override individual fields before passing the struct to
 * `hf_workspace_run`.
 */
typedef struct HfRunOptions {
  /**
   * Maximum degree of randomly sampled elements.
   */
  uint32_t max_degree;
  /**
   * Number of random samples per law.
   */
  uint32_t samples;
  /**
   * Seed for the deterministic sampler.
   */
  uint64_t seed;
  /**
   * Rewrite-step budget per normal form.
   */
  uint64_t fuel;
} HfRunOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The most recent error message on this thread, or null if the last call
 * succeeded.  The pointer is owned by the library and is invalidated by
 * the next call on the same thread; do not free it.
 */
const char *hf_last_error(void);

/**
 * The default run parameters: degree 6, 100 samples, seed 42, fuel 10^6.
 */
struct HfRunOptions hf_run_options_default(void);

/**
 * Parse a document and build everything it declares.
 *
 * `field` optionally overrides the declared coefficient field
 * (`"rational"`, `"gf:P"`, or `"ratfunc"`).  On success `*out` owns the
 * workspace; release it with `hf_workspace_free`.
 *
 * # Safety
 * `text` and `field` must be null or valid NUL-terminated strings; `out`
 * must be a valid pointer.
 */
enum HfStatus hf_workspace_parse(const char *text,
                                 const char *field,
                                 uint64_t fuel,
                                 struct HfWorkspace **out);

/**
 * Build a catalog workspace by name: `axb-universal`, `axb-q`, `axb-qn`,
 * or `laurent`.
 *
 * `q` is an optional scalar expression such as `"2"`, `"q"`, or `"1/3"`;
 * `n` optionally points to the twist period; `field` optionally names the
 * coefficient field.  On success `*out` owns the workspace.
 *
 * # Safety
 * String arguments must be null or valid NUL-terminated strings; `n` must
 * be null or point to an `int64_t`; `out` must be a valid pointer.
 */
enum HfStatus hf_workspace_builtin(const char *name,
                                   const char *q,
                                   const int64_t *n,
                                   const char *field,
                                   struct HfWorkspace **out);

/**
 * Release a workspace.  Null is ignored.
 *
 * # Safety
 * `ws` must be null or a pointer returned by a workspace constructor that
 * has not been freed yet.
 */
void hf_workspace_free(struct HfWorkspace *ws);

/**
 * Run the declared checks.
 *
 * `suites` optionally selects suites by name (`suite_count` entries; pass
 * null/0 to run everything declared, or include `"all"`).  `options` may
 * be null for defaults.  On success `*out` owns the report; release it
 * with `hf_report_free`.
 *
 * # Safety
 * `ws` must be a live workspace handle; `suites` must be null or point to
 * `suite_count` valid NUL-terminated strings; `options` must be null or
 * valid; `out` must be a valid pointer.
 */
enum HfStatus hf_workspace_run(const struct HfWorkspace *ws,
                               const char *const *suites,
                               size_t suite_count,
                               const struct HfRunOptions *options,
                               struct HfReport **out);

/**
 * The process exit code the CLI would use for this report: 0 if every
 * case passed, 1 if any failed, 3 if none failed but some were
 * unverified.  Returns -1 for a null handle.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
int32_t hf_report_exit_code(const struct HfReport *report);

/**
 * Number of cases in the report.  Returns 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
size_t hf_report_case_count(const struct HfReport *report);

/**
 * The report as deterministic JSON.  Free with `hf_string_free`; returns
 * null for a null handle.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
char *hf_report_json(const struct HfReport *report);

/**
 * The report as human-readable text.  Free with `hf_string_free`; returns
 * null for a null handle.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
char *hf_report_text(const struct HfReport *report);

/**
 * Release a report.  Null is ignored.
 *
 * # Safety
 * `report` must be null or a pointer returned by `hf_workspace_run` that
 * has not been freed yet.
 */
void hf_report_free(struct HfReport *report);

/**
 * Evaluate `expr` in the named algebra of the workspace and return its
 * canonical normal form, or null on error (see `hf_last_error`).  Free
 * the result with `hf_string_free`.
 *
 * # Safety
 * `ws` must be a live workspace handle; `algebra` and `expr` must be
 * valid NUL-terminated strings.
 */
char *hf_normal_form(const struct HfWorkspace *ws, const char *algebra, const char *expr);

/**
 * Release a string returned by this library.  Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by a function documented to be
 * freed this way, not yet freed.
 */
void hf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFFORGE_H */
