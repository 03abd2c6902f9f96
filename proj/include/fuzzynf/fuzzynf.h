/* C interface to the fuzzynf library.
 *
 * All objects are opaque handles created by fnf_*_load / fnf_*_parse or by an
 * analysis call, and released with the matching fnf_*_free. Every fallible
 * call returns an fnf_status; on failure fnf_last_error() describes the
 * problem for the calling thread. Strings returned by the library stay valid
 * until the owning handle is freed.
 */
#ifndef FUZZYNF_H
#define FUZZYNF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FUZZYNF_BUILDING)
#define FNF_API __declspec(dllexport)
#else
#define FNF_API __declspec(dllimport)
#endif
#else
#define FNF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fnf_relation fnf_relation;
typedef struct fnf_deps fnf_deps;
typedef struct fnf_report fnf_report;

typedef enum fnf_status {
  FNF_OK = 0,
  FNF_ERR_IO = 1,       /* file missing or unreadable */
  FNF_ERR_PARSE = 2,    /* relation CSV or dependency DSL syntax */
  FNF_ERR_SCHEMA = 3,   /* unknown attribute, kind mismatch, non-crisp input */
  FNF_ERR_ARGUMENT = 4, /* null handle, degree outside [0,1], bad enum */
  FNF_ERR_INTERNAL = 5
} fnf_status;

typedef enum fnf_format { FNF_FORMAT_TEXT = 0, FNF_FORMAT_JSON = 1 } fnf_format;

typedef enum fnf_verdict {
  FNF_VERDICT_INFO = 0,
  FNF_VERDICT_HOLDS = 1,
  FNF_VERDICT_VIOLATED = 2
} fnf_verdict;

typedef enum fnf_mvd_mode { FNF_MVD_WITNESS = 0, FNF_MVD_PAPER = 1 } fnf_mvd_mode;
typedef enum fnf_jd_mode { FNF_JD_RECONSTRUCTION = 0, FNF_JD_PAIRWISE = 1 } fnf_jd_mode;
typedef enum fnf_key_rule { FNF_RULE_COMPONENT = 0, FNF_RULE_DETERMINANT = 1 } fnf_key_rule;

/* An exact rational in [0, 1]. */
typedef struct fnf_degree {
  int64_t num;
  int64_t den;
} fnf_degree;

FNF_API const char* fnf_version(void);
FNF_API const char* fnf_last_error(void);

/* "1/2", "1", "0.4" (exactly 2/5). Fails outside [0, 1]. */
FNF_API fnf_status fnf_parse_degree(const char* text, fnf_degree* out);

FNF_API fnf_status fnf_relation_load(const char* path, fnf_relation** out);
FNF_API fnf_status fnf_relation_parse(const char* text, const char* origin, fnf_relation** out);
FNF_API size_t fnf_relation_tuple_count(const fnf_relation* rel);
FNF_API size_t fnf_relation_attribute_count(const fnf_relation* rel);
FNF_API void fnf_relation_free(fnf_relation* rel);

FNF_API fnf_status fnf_deps_load(const char* path, fnf_deps** out);
FNF_API fnf_status fnf_deps_parse(const char* text, const char* origin, fnf_deps** out);
FNF_API size_t fnf_deps_count(const fnf_deps* deps);
FNF_API void fnf_deps_free(fnf_deps* deps);

/* Analyses. Each produces a report handle on success. */
FNF_API fnf_status fnf_sim_matrix(const fnf_relation* rel, const char* attribute, fnf_report** out);
FNF_API fnf_status fnf_check(const fnf_relation* rel, const fnf_deps* deps, fnf_mvd_mode mvd_mode,
                             fnf_jd_mode jd_mode, fnf_degree alpha, fnf_report** out);
FNF_API fnf_status fnf_keys(const fnf_relation* rel, fnf_report** out);
FNF_API fnf_status fnf_is_5nf(const fnf_relation* rel, const fnf_deps* deps, fnf_key_rule rule,
                              fnf_report** out);
FNF_API fnf_status fnf_decompose(const fnf_relation* rel, const fnf_deps* deps, fnf_degree alpha,
                                 fnf_key_rule rule, fnf_report** out);
/* components: "(a,b),(b,c)" */
FNF_API fnf_status fnf_verify_lossless(const fnf_relation* rel, const char* components,
                                       fnf_degree alpha, fnf_report** out);
FNF_API fnf_status fnf_oracle_diff(const fnf_relation* rel, const fnf_deps* deps, fnf_report** out);

FNF_API fnf_verdict fnf_report_verdict(const fnf_report* report);
/* Rendered text; NULL on failure. Owned by the report. */
FNF_API const char* fnf_report_render(fnf_report* report, fnf_format format);
FNF_API void fnf_report_free(fnf_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FUZZYNF_H */
