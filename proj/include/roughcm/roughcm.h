/*
 * roughcm C API.
 *
 * Every object is an opaque handle created by an rcm_*_new / rcm_*_from_* /
 * producer call and released with the matching rcm_*_free. Functions that can
 * fail return an rcm_status; on failure the out-parameters are untouched and
 * rcm_last_error_message() describes the problem (thread-local storage, valid
 * until the next failing call on the same thread).
 *
 * Granule and class indices are 1-based at this boundary, matching the
 * rendered reports and classifier mapping files.
 */
#ifndef ROUGHCM_H
#define ROUGHCM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ROUGHCM_BUILDING)
#    define ROUGHCM_API __declspec(dllexport)
#  else
#    define ROUGHCM_API __declspec(dllimport)
#  endif
#else
#  define ROUGHCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcm_status {
  RCM_OK = 0,
  RCM_ERR_INVALID_ARGUMENT = 1,
  RCM_ERR_UNKNOWN_ATTRIBUTE = 2,
  RCM_ERR_DEGENERATE_DECISION = 3,
  RCM_ERR_UNIVERSE_MISMATCH = 4,
  RCM_ERR_SHAPE_MISMATCH = 5,
  RCM_ERR_INDEX_OUT_OF_RANGE = 6,
  RCM_ERR_UNDEFINED_CLASS = 7,
  RCM_ERR_RANGE = 8,
  RCM_ERR_CONFIG = 9,
  RCM_ERR_INSTANCE_TOO_LARGE = 10,
  RCM_ERR_PARSE = 11,
  RCM_ERR_IO = 12,
  RCM_ERR_INTERNAL = 99
} rcm_status;

typedef enum rcm_tie_break {
  RCM_TIE_LOWEST = 0,
  RCM_TIE_HIGHEST = 1,
  RCM_TIE_RANDOM = 2
} rcm_tie_break;

typedef enum rcm_format { RCM_FORMAT_JSON = 0, RCM_FORMAT_TEXT = 1 } rcm_format;

typedef enum rcm_classifier_kind {
  RCM_KIND_MRC = 0,
  RCM_KIND_RANDOM_VALIDATED = 1,
  RCM_KIND_SUPPLIED = 2
} rcm_classifier_kind;

/* Exact rational in lowest terms, den > 0. */
typedef struct rcm_rational {
  int64_t num;
  int64_t den;
} rcm_rational;

typedef struct rcm_system rcm_system;
typedef struct rcm_partition rcm_partition;
typedef struct rcm_object_set rcm_object_set;
typedef struct rcm_gfm rcm_gfm;
typedef struct rcm_classifier rcm_classifier;
typedef struct rcm_confusion rcm_confusion;
typedef struct rcm_report rcm_report;
typedef struct rcm_fuzz_result rcm_fuzz_result;

ROUGHCM_API const char* rcm_version(void);
ROUGHCM_API const char* rcm_status_string(rcm_status status);
ROUGHCM_API const char* rcm_last_error_message(void);
/* Releases strings returned through char** out-parameters. */
ROUGHCM_API void rcm_string_free(char* s);

/* ---- decision systems ------------------------------------------------- */

/* decision_column may be NULL: the last column is the decision. */
ROUGHCM_API rcm_status rcm_system_from_csv_file(const char* path, const char* decision_column,
                                                rcm_system** out);
ROUGHCM_API rcm_status rcm_system_from_csv_text(const char* text, const char* decision_column,
                                                rcm_system** out);

typedef struct rcm_generator_config {
  size_t n_objects;            /* 2..100 */
  size_t n_attributes;         /* 1..8 */
  size_t values_per_attribute; /* 1..6 */
  size_t n_decision_values;    /* 2..8 */
  uint64_t seed;
} rcm_generator_config;

ROUGHCM_API rcm_status rcm_system_generate(const rcm_generator_config* config, rcm_system** out);
ROUGHCM_API void rcm_system_free(rcm_system* system);
ROUGHCM_API size_t rcm_system_object_count(const rcm_system* system);
ROUGHCM_API size_t rcm_system_attribute_count(const rcm_system* system);
/* NULL when index is out of range. Borrowed; lives as long as the system. */
ROUGHCM_API const char* rcm_system_attribute_name(const rcm_system* system, size_t index);
ROUGHCM_API const char* rcm_system_decision_name(const rcm_system* system);

/* ---- partitions, object sets, approximations ------------------------- */

ROUGHCM_API rcm_status rcm_partition_by_attributes(const rcm_system* system,
                                                   const char* const* names, size_t count,
                                                   rcm_partition** out);
ROUGHCM_API rcm_status rcm_decision_partition(const rcm_system* system, rcm_partition** out);
/* Blocks laid out back to back in ids; block_sizes[b] members each. */
ROUGHCM_API rcm_status rcm_partition_from_blocks(const uint64_t* ids, const size_t* block_sizes,
                                                 size_t block_count, rcm_partition** out);
ROUGHCM_API void rcm_partition_free(rcm_partition* partition);
ROUGHCM_API size_t rcm_partition_block_count(const rcm_partition* partition);
/* 0-based block index. *ids is borrowed from the partition. */
ROUGHCM_API rcm_status rcm_partition_block(const rcm_partition* partition, size_t index,
                                           const uint64_t** ids, size_t* size);

ROUGHCM_API rcm_status rcm_object_set_new(const uint64_t* ids, size_t count, rcm_object_set** out);
ROUGHCM_API void rcm_object_set_free(rcm_object_set* set);
ROUGHCM_API size_t rcm_object_set_size(const rcm_object_set* set);
/* Sorted ascending; borrowed. */
ROUGHCM_API const uint64_t* rcm_object_set_data(const rcm_object_set* set);

ROUGHCM_API rcm_status rcm_lower_approximation(const rcm_partition* partition,
                                               const rcm_object_set* set, rcm_object_set** out);
ROUGHCM_API rcm_status rcm_upper_approximation(const rcm_partition* partition,
                                               const rcm_object_set* set, rcm_object_set** out);
ROUGHCM_API rcm_status rcm_is_definable(const rcm_partition* partition, const rcm_object_set* set,
                                        int* out);
ROUGHCM_API rcm_status rcm_deterministic_region(const rcm_partition* granules,
                                                const rcm_partition* decisions,
                                                rcm_object_set** out);

/* ---- granule frequency and confusion matrices ------------------------ */

ROUGHCM_API rcm_status rcm_gfm_from_partitions(const rcm_partition* granules,
                                               const rcm_partition* decisions, rcm_gfm** out);
/* Row-major rows x cols counts. */
ROUGHCM_API rcm_status rcm_gfm_from_counts(const uint64_t* cells, size_t rows, size_t cols,
                                           rcm_gfm** out);
ROUGHCM_API void rcm_gfm_free(rcm_gfm* gfm);
ROUGHCM_API size_t rcm_gfm_granule_count(const rcm_gfm* gfm);
ROUGHCM_API size_t rcm_gfm_class_count(const rcm_gfm* gfm);
ROUGHCM_API uint64_t rcm_gfm_total(const rcm_gfm* gfm);
ROUGHCM_API rcm_status rcm_gfm_cell(const rcm_gfm* gfm, size_t granule, size_t cls,
                                    uint64_t* out);

ROUGHCM_API rcm_status rcm_confusion_matrix(const rcm_gfm* gfm, const rcm_classifier* classifier,
                                            rcm_confusion** out);
/* Row-major k x k counts, rows predicted, columns true. */
ROUGHCM_API rcm_status rcm_confusion_from_counts(const uint64_t* cells, size_t k,
                                                 rcm_confusion** out);
ROUGHCM_API void rcm_confusion_free(rcm_confusion* cm);
ROUGHCM_API size_t rcm_confusion_class_count(const rcm_confusion* cm);
ROUGHCM_API uint64_t rcm_confusion_total(const rcm_confusion* cm);
ROUGHCM_API rcm_status rcm_confusion_cell(const rcm_confusion* cm, size_t predicted,
                                          size_t actual, uint64_t* out);

/* ---- classifiers ------------------------------------------------------ */

/* classes[g-1] is the 1-based class of granule g. */
ROUGHCM_API rcm_status rcm_classifier_new(const size_t* classes, size_t granule_count,
                                          size_t class_count, rcm_classifier** out);
ROUGHCM_API rcm_status rcm_classifier_mrc(const rcm_gfm* gfm, rcm_tie_break tie_break,
                                          uint64_t seed, rcm_classifier** out);
/* `granule class` lines, '#' comments. */
ROUGHCM_API rcm_status rcm_classifier_parse(const char* text, size_t granule_count,
                                            size_t class_count, rcm_classifier** out);
ROUGHCM_API rcm_status rcm_classifier_format(const rcm_classifier* classifier, char** out);
ROUGHCM_API void rcm_classifier_free(rcm_classifier* classifier);
ROUGHCM_API size_t rcm_classifier_granule_count(const rcm_classifier* classifier);
ROUGHCM_API rcm_status rcm_classifier_class_of(const rcm_classifier* classifier, size_t granule,
                                               size_t* cls);
/* Writes up to `capacity` violating granules (1-based) into `violations`
 * (may be NULL) and the total number into *violation_count. */
ROUGHCM_API rcm_status rcm_validate_overlap(const rcm_classifier* classifier, const rcm_gfm* gfm,
                                            size_t* violations, size_t capacity,
                                            size_t* violation_count);
ROUGHCM_API rcm_status rcm_predictor_set(const rcm_classifier* classifier, size_t cls,
                                         const rcm_partition* granules, rcm_object_set** out);

/* ---- indices and bounds ----------------------------------------------- */

ROUGHCM_API uint64_t rcm_indicator(uint64_t value);
ROUGHCM_API rcm_status rcm_success_ratio(const rcm_confusion* cm, rcm_rational* out);
ROUGHCM_API rcm_status rcm_gamma_hat(const rcm_confusion* cm, rcm_rational* out);
/* RCM_ERR_UNDEFINED_CLASS when the class is neither predicted nor present. */
ROUGHCM_API rcm_status rcm_alpha_hat(const rcm_confusion* cm, size_t cls, rcm_rational* out);
ROUGHCM_API rcm_status rcm_alpha_aggregate(const rcm_confusion* cm, rcm_rational* out);
ROUGHCM_API rcm_status rcm_alpha_from_gamma(rcm_rational gamma, rcm_rational* out);

typedef struct rcm_class_approximation {
  uint64_t n;
  uint64_t nl;
  uint64_t nu;
  rcm_rational p_lower;
  rcm_rational p_upper;
  rcm_rational alpha;
} rcm_class_approximation;

/* Fills up to `capacity` entries; *class_count receives k. */
ROUGHCM_API rcm_status rcm_approximation_summary(const rcm_partition* granules,
                                                 const rcm_partition* decisions,
                                                 rcm_class_approximation* out, size_t capacity,
                                                 size_t* class_count, rcm_rational* gamma);

typedef struct rcm_class_bounds {
  uint64_t class_size;
  uint64_t nl_star;
  uint64_t nl_star2;
  uint64_t nu_star;
  uint64_t nu_star2;
  uint64_t nl_m; /* valid when has_mrc_bounds */
  uint64_t nu_m; /* valid when has_mrc_bounds */
  int has_mrc_bounds;
  int clamped;
} rcm_class_bounds;

ROUGHCM_API rcm_status rcm_confusion_bounds(const rcm_confusion* cm, int rule_validated,
                                            int is_mrc, rcm_class_bounds* out, size_t capacity,
                                            size_t* class_count);

/* ---- oracle ----------------------------------------------------------- */

ROUGHCM_API rcm_status rcm_oracle_lower(const rcm_partition* partition, const rcm_object_set* set,
                                        rcm_object_set** out);
ROUGHCM_API rcm_status rcm_oracle_upper(const rcm_partition* partition, const rcm_object_set* set,
                                        rcm_object_set** out);
ROUGHCM_API rcm_status rcm_exhaustive_best_classifier(const rcm_gfm* gfm, rcm_classifier** out,
                                                      rcm_rational* success_ratio);
ROUGHCM_API rcm_status rcm_verify_theorems(const rcm_system* system, const char* const* names,
                                           size_t count, const rcm_classifier* classifier,
                                           rcm_classifier_kind kind, size_t* failures);

typedef struct rcm_fuzz_config {
  size_t trials;
  uint64_t seed;
  size_t max_objects;    /* 2..100 */
  size_t max_attributes; /* 1..8 */
  size_t max_values;     /* 1..6 */
  size_t max_classes;    /* 2..8 */
  unsigned threads;
} rcm_fuzz_config;

ROUGHCM_API void rcm_fuzz_config_default(rcm_fuzz_config* config);
ROUGHCM_API rcm_status rcm_fuzz_run(const rcm_fuzz_config* config, rcm_fuzz_result** out);
ROUGHCM_API void rcm_fuzz_free(rcm_fuzz_result* result);
ROUGHCM_API size_t rcm_fuzz_trials_run(const rcm_fuzz_result* result);
ROUGHCM_API size_t rcm_fuzz_failed_trials(const rcm_fuzz_result* result);
ROUGHCM_API rcm_status rcm_fuzz_render(const rcm_fuzz_result* result, rcm_format format,
                                       char** out);

/* ---- analysis reports ------------------------------------------------- */

typedef struct rcm_analysis_options {
  const char* const* attributes; /* NULL or empty: all condition attributes */
  size_t attribute_count;
  const char* classifier_path;   /* NULL: maximal row classifier */
  rcm_tie_break tie_break;
  uint64_t seed;
  const char* source_name;       /* recorded in the report; NULL: "<input>" */
} rcm_analysis_options;

ROUGHCM_API void rcm_analysis_options_default(rcm_analysis_options* options);
ROUGHCM_API rcm_status rcm_analyze(const rcm_system* system, const rcm_analysis_options* options,
                                   rcm_report** out);
ROUGHCM_API rcm_status rcm_report_from_json(const char* json, rcm_report** out);
ROUGHCM_API void rcm_report_free(rcm_report* report);
ROUGHCM_API int rcm_report_rule_satisfied(const rcm_report* report);
ROUGHCM_API int rcm_report_theorems_pass(const rcm_report* report);
ROUGHCM_API rcm_status rcm_report_render(const rcm_report* report, rcm_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ROUGHCM_H */
