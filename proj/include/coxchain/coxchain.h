/* C interface to the coxchain library. Every call returns a status code;
 * on failure coxchain_last_error() describes what went wrong. */
#ifndef COXCHAIN_H
#define COXCHAIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(COXCHAIN_BUILDING)
#define COXCHAIN_API __attribute__((visibility("default")))
#else
#define COXCHAIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coxchain_status {
  COXCHAIN_OK = 0,
  COXCHAIN_ASSERTION_FAILED = 1,
  COXCHAIN_INVALID_ARGUMENT = 2,
  COXCHAIN_GUARD_EXCEEDED = 3,
  COXCHAIN_INTERNAL_ERROR = 4
} coxchain_status;

typedef struct coxchain_options {
  int jobs;
  uint64_t max_chains;
  uint64_t max_classes;
  uint64_t seed;
} coxchain_options;

typedef struct coxchain_context coxchain_context;
/* named output files plus the pass/fail lines of one run */
typedef struct coxchain_bundle coxchain_bundle;

COXCHAIN_API coxchain_options coxchain_default_options(void);
COXCHAIN_API const char* coxchain_last_error(void);
COXCHAIN_API const char* coxchain_version(void);

/* type is a tag such as "A3", "B2", "G2" */
COXCHAIN_API coxchain_status coxchain_open(const char* type, const coxchain_options* opts,
                                           coxchain_context** out);
COXCHAIN_API void coxchain_close(coxchain_context* ctx);

COXCHAIN_API size_t coxchain_bundle_size(const coxchain_bundle* b);
COXCHAIN_API const char* coxchain_bundle_name(const coxchain_bundle* b, size_t i);
COXCHAIN_API const char* coxchain_bundle_content(const coxchain_bundle* b, size_t i);
/* 1 when every hard check passed */
COXCHAIN_API int coxchain_bundle_passed(const coxchain_bundle* b);
COXCHAIN_API const char* coxchain_bundle_summary(const coxchain_bundle* b);
COXCHAIN_API void coxchain_bundle_free(coxchain_bundle* b);

/* coxeter: "linear", "bipartite" or 1-based indices like "2,1,3"; NULL means linear.
 * A bundle is returned also when checks fail (status ASSERTION_FAILED). */
COXCHAIN_API coxchain_status coxchain_gen(coxchain_context* ctx, coxchain_bundle** out);
COXCHAIN_API coxchain_status coxchain_mg(coxchain_context* ctx, const char* coxeter,
                                         coxchain_bundle** out);
COXCHAIN_API coxchain_status coxchain_cambrian_quotient(coxchain_context* ctx, const char* coxeter,
                                                        coxchain_bundle** out);
COXCHAIN_API coxchain_status coxchain_cambrian_verify_cstable(coxchain_context* ctx,
                                                              const char* coxeter,
                                                              coxchain_bundle** out);
COXCHAIN_API coxchain_status coxchain_cambrian_chain_map(coxchain_context* ctx, const char* coxeter,
                                                         coxchain_bundle** out);
COXCHAIN_API coxchain_status coxchain_bruhat_build(int n, const coxchain_options* opts,
                                                   coxchain_bundle** out);
COXCHAIN_API coxchain_status coxchain_bruhat_map_f(int n, const coxchain_options* opts,
                                                   coxchain_bundle** out);
/* word: 1-based comma-separated reduced word of w0 */
COXCHAIN_API coxchain_status coxchain_bruhat_rhbo(coxchain_context* ctx, const char* word,
                                                  coxchain_bundle** out);
COXCHAIN_API coxchain_status coxchain_verify_all(coxchain_context* ctx, coxchain_bundle** out);
COXCHAIN_API coxchain_status coxchain_experiment(coxchain_context* ctx, const char* name,
                                                 coxchain_bundle** out);

#ifdef __cplusplus
}
#endif

#endif
