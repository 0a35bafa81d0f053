#ifndef UAVHET_UAVHET_H
#define UAVHET_UAVHET_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(UAVHET_BUILDING)
#    define UAVHET_API __declspec(dllexport)
#  else
#    define UAVHET_API __declspec(dllimport)
#  endif
#else
#  define UAVHET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uavhet_status {
  UAVHET_OK = 0,
  UAVHET_INVALID_ARGUMENT = 1,
  UAVHET_CONFIG = 2,
  UAVHET_IO = 3,
  UAVHET_NUMERIC = 4,
  UAVHET_INTERNAL = 5
} uavhet_status;

typedef struct uavhet_config uavhet_config;
typedef struct uavhet_result uavhet_result;

UAVHET_API const char* uavhet_version(void);

/* Short lowercase name of a status, e.g. "config". */
UAVHET_API const char* uavhet_status_name(uavhet_status status);

/* Message of the last failure on the calling thread; "" when none. Valid
   until the next call on the same thread. */
UAVHET_API const char* uavhet_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
UAVHET_API void uavhet_string_free(char* s);

UAVHET_API uavhet_status uavhet_config_create_default(uavhet_config** out);
UAVHET_API uavhet_status uavhet_config_load_file(const char* path, uavhet_config** out);
UAVHET_API uavhet_status uavhet_config_load_json(const char* json_text, uavhet_config** out);
UAVHET_API void uavhet_config_destroy(uavhet_config* cfg);

UAVHET_API uavhet_status uavhet_config_set_seed(uavhet_config* cfg, uint64_t seed);
UAVHET_API uavhet_status uavhet_config_set_uavs_enabled(uavhet_config* cfg, int enabled);
UAVHET_API uavhet_status uavhet_config_set_replications(uavhet_config* cfg, uint32_t replications);
UAVHET_API uavhet_status uavhet_config_set_horizon(uavhet_config* cfg, uint32_t steps);
/* Any numeric config key by name; the whole config is re-validated. */
UAVHET_API uavhet_status uavhet_config_set_number(uavhet_config* cfg, const char* key, double value);
UAVHET_API uavhet_status uavhet_config_to_json(const uavhet_config* cfg, char** out_json);

/* Runs every replication in memory, keeping the step records. */
UAVHET_API uavhet_status uavhet_run(const uavhet_config* cfg, uavhet_result** out);
UAVHET_API void uavhet_result_destroy(uavhet_result* result);
UAVHET_API uavhet_status uavhet_result_write(const uavhet_result* result, const char* out_dir);
UAVHET_API uavhet_status uavhet_result_metrics_json(const uavhet_result* result, char** out_json);
/* Replications that aborted with a diagnostic. */
UAVHET_API uint32_t uavhet_result_failed_replications(const uavhet_result* result);

/* Runs and writes metrics.json, steps.csv, assignment.json and costs.csv,
   streaming step records to disk. Returns UAVHET_NUMERIC when any
   replication aborted; the files are still written. */
UAVHET_API uavhet_status uavhet_run_to_dir(const uavhet_config* cfg, const char* out_dir,
                                           char** out_metrics_json);

/* Baseline and UAV runs on shared seeds under out_dir/{uav,baseline}, plus
   out_dir/compare.json. */
UAVHET_API uavhet_status uavhet_compare(const uavhet_config* cfg, const char* out_dir,
                                        char** out_summary_json);

/* grid_json is an array of flat objects of numeric overrides; NULL selects
   the built-in grid. Writes sweep.json, sweep.csv and SVG plots. */
UAVHET_API uavhet_status uavhet_sweep(const uavhet_config* cfg, const char* grid_json,
                                      const char* out_dir, char** out_summary_json);

/* Re-aggregates run_dir/steps.csv into run_dir/report.json. Thresholds come
   from cfg, or from run_dir/metrics.json when cfg is NULL and it exists. */
UAVHET_API uavhet_status uavhet_report(const char* run_dir, const uavhet_config* cfg,
                                       char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif
