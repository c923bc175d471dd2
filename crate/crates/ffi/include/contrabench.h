/* Generated by cbindgen. Do not edit. */

#ifndef CONTRABENCH_H
#define CONTRABENCH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CbMock {
  CB_MOCK_NOT_MOCK_PROJECTIVE = 0,
  CB_MOCK_PROPER_MOCK_PROJECTIVE = 1,
  CB_MOCK_PROJECTIVE = 2,
} CbMock;

/**
 * Same meaning as the command-line exit codes, plus two boundary errors.
 */
typedef enum CbStatus {
  CB_STATUS_OK = 0,
  /**
   * A validator or a certified statement failed.
   */
  CB_STATUS_FALSIFIED = 1,
  /**
   * Unparseable or inconsistent input.
   */
  CB_STATUS_INPUT = 2,
  CB_STATUS_NULL_ARGUMENT = 3,
  /**
   * A Rust panic was caught at the boundary.
   */
  CB_STATUS_INTERNAL = 4,
} CbStatus;

/**
 * A contramodule together with the algebra it lives over.
 */
typedef struct CbContramodule CbContramodule;

/**
 * A loaded interchange document.
 */
typedef struct CbWorkspace CbWorkspace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *cb_last_error(void);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void cb_string_free(char *s);

/**
 * Parses and loads an interchange document.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is writable.
 */
enum CbStatus cb_workspace_parse(const char *json, struct CbWorkspace **out);

/**
 * Runs every structural validator. `CB_STATUS_FALSIFIED` when one fails;
 * the message lists the failed axioms.
 *
 * # Safety
 * `ws` is a live handle.
 */
enum CbStatus cb_workspace_validate(const struct CbWorkspace *ws);

/**
 * Copies out a named contramodule of the document.
 *
 * # Safety
 * `ws` is a live handle, `name` NUL-terminated, `out` writable.
 */
enum CbStatus cb_workspace_contramodule(const struct CbWorkspace *ws,
                                        const char *name,
                                        struct CbContramodule **out);

/**
 * # Safety
 * `ws` comes from [`cb_workspace_parse`], or is null.
 */
void cb_workspace_free(struct CbWorkspace *ws);

/**
 * Interchange document of a builtin group scheme such as `s3_p3`.
 *
 * # Safety
 * `name` is NUL-terminated; `out` is writable.
 */
enum CbStatus cb_builtin_document(const char *name, char **out);

/**
 * `kind` is `free` (of the given rank) or `trivial` (`k^rank`).
 *
 * # Safety
 * Strings are NUL-terminated; `out` is writable.
 */
enum CbStatus cb_contramodule_builtin(const char *scheme,
                                      const char *kind,
                                      size_t rank,
                                      struct CbContramodule **out);

/**
 * Like [`cb_contramodule_builtin`], over the source of a tower map
 * (`pi_1`, `pi_2`, ..., `pi_H`), or over the ambient for `ambient`.
 *
 * # Safety
 * Strings are NUL-terminated; `out` is writable.
 */
enum CbStatus cb_contramodule_on_tower(const char *tower_name,
                                       const char *along,
                                       const char *kind,
                                       size_t rank,
                                       struct CbContramodule **out);

/**
 * The induced module `Ind k` of a builtin tower.
 *
 * # Safety
 * `tower_name` is NUL-terminated; `out` is writable.
 */
enum CbStatus cb_contramodule_witness(const char *tower_name, struct CbContramodule **out);

/**
 * Induces `b` along a tower map (`pi_1`, `pi_2`, ..., `pi_H`).
 *
 * # Safety
 * Strings are NUL-terminated, `b` is a live handle, `out` is writable.
 */
enum CbStatus cb_contramodule_induce(const char *tower_name,
                                     const char *along,
                                     const struct CbContramodule *b,
                                     struct CbContramodule **out);

/**
 * Dimension over F_p; 0 for a null handle.
 *
 * # Safety
 * `b` is a live handle or null.
 */
size_t cb_contramodule_dim(const struct CbContramodule *b);

/**
 * Projectivity verdict; `obstruction` is the rank of the failed splitting
 * (0 when projective). Either pointer may be null.
 *
 * # Safety
 * `b` is a live handle.
 */
enum CbStatus cb_contramodule_is_projective(const struct CbContramodule *b,
                                            bool *verdict,
                                            size_t *obstruction);

/**
 * Mock projectivity of `b` against a builtin tower.
 *
 * # Safety
 * `tower_name` is NUL-terminated, `b` is a live handle, `kind` writable.
 */
enum CbStatus cb_contramodule_mock(const char *tower_name,
                                   const struct CbContramodule *b,
                                   enum CbMock *kind);

/**
 * Interchange document holding the module and its algebra.
 *
 * # Safety
 * `b` is a live handle; `out` is writable.
 */
enum CbStatus cb_contramodule_to_json(const struct CbContramodule *b, char **out);

/**
 * # Safety
 * `b` comes from this library, or is null.
 */
void cb_contramodule_free(struct CbContramodule *b);

/**
 * Runs the certification suite. `manifest_json` may be null for the default
 * suite; `jobs` = 0 uses every core. The canonical report goes to `out`.
 * `CB_STATUS_FALSIFIED` when any record is not a pass.
 *
 * # Safety
 * `manifest_json` is NUL-terminated or null; `out` is writable.
 */
enum CbStatus cb_suite_run(const char *manifest_json, size_t jobs, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONTRABENCH_H */
