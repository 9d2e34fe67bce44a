#ifndef CFL_CFL_H
#define CFL_CFL_H

/* C interface to the verification library. All handles are opaque; every
 * call that can fail returns a cfl_status and leaves a message readable with
 * cfl_last_error() on the calling thread. Strings returned through char**
 * are owned by the caller and released with cfl_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1..16 equal the library's ErrorCode. */
typedef enum cfl_status {
  CFL_OK = 0,
  CFL_INVALID_ARGUMENT = 1,
  CFL_DIMENSION_MISMATCH = 2,
  CFL_OUT_OF_RANGE = 3,
  CFL_BUDGET_EXCEEDED = 4,
  CFL_MIXED_KINDS = 5,
  CFL_NOT_ISOMETRY = 6,
  CFL_NOT_SPANNING = 7,
  CFL_UNKNOWN_GROUP = 8,
  CFL_CACHE_MISSING = 9,
  CFL_CACHE_CORRUPT = 10,
  CFL_PARSE_ERROR = 11,
  CFL_NOT_INVARIANT = 12,
  CFL_INCONSISTENT = 13,
  CFL_IO_ERROR = 14,
  CFL_UNSUPPORTED = 15,
  CFL_VERDICT_DISAGREEMENT = 16,
  CFL_INTERNAL = 99
} cfl_status;

typedef enum cfl_check_status {
  CFL_CHECK_PASS = 0,
  CFL_CHECK_FAIL = 1,
  CFL_CHECK_EXTERNAL_REFERENCE = 2,
  CFL_CHECK_UNKNOWN_GROUP = 3
} cfl_check_status;

typedef enum cfl_format { CFL_FORMAT_TEXT = 0, CFL_FORMAT_JSON = 1 } cfl_format;

typedef struct cfl_options cfl_options;
typedef struct cfl_report cfl_report;

const char* cfl_version(void);
const char* cfl_status_name(cfl_status s);
/* Message of the last failed call on this thread; "" if none. */
const char* cfl_last_error(void);
void cfl_string_free(char* s);

cfl_status cfl_options_new(cfl_options** out);
void cfl_options_free(cfl_options* o);
/* NULL or "" clears the cache directory. */
cfl_status cfl_options_set_cache_dir(cfl_options* o, const char* dir);
cfl_status cfl_options_set_jobs(cfl_options* o, unsigned jobs);
cfl_status cfl_options_set_max_order(cfl_options* o, int max_order);

size_t cfl_target_count(void);
/* NULL past the end. */
const char* cfl_target_name(size_t i);

/* opts may be NULL for defaults. */
cfl_status cfl_verify(const char* target, const cfl_options* opts, cfl_report** out);
cfl_status cfl_report_from_json(const char* text, cfl_report** out);
void cfl_report_free(cfl_report* r);
int cfl_report_passed(const cfl_report* r);
int cfl_report_count(const cfl_report* r, cfl_check_status s);
double cfl_report_seconds(const cfl_report* r);
cfl_status cfl_report_render(const cfl_report* r, cfl_format fmt, int with_timing, char** out);

/* Weyl closure cache for degree 2 <= d <= 7 under dir. */
cfl_status cfl_cache_path(const char* dir, int degree, char** out);
cfl_status cfl_cache_build(const char* dir, int degree, unsigned jobs, uint64_t* order);
/* CFL_CACHE_MISSING when absent, CFL_CACHE_CORRUPT on checksum or size errors. */
cfl_status cfl_cache_verify(const char* dir, int degree, uint64_t* order);

/* Loads a scene (shipped name or file path) and names its group: catalog
 * label, or "C<n>" when cyclic; CFL_UNKNOWN_GROUP otherwise. */
cfl_status cfl_scene_identify(const char* scene, int max_order, char** label, int* order);

#ifdef __cplusplus
}
#endif

#endif
