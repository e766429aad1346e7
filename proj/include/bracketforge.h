#ifndef BRACKETFORGE_H
#define BRACKETFORGE_H

/* C interface. Reports are returned as JSON strings owned by the caller
 * (release with bf_string_free). On failure a function returns a non-zero
 * bf_status and bf_last_error() describes it (per thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BF_API __declspec(dllexport)
#else
#define BF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bf_status {
  BF_OK = 0,
  BF_INVALID_ARGUMENT = 1,
  BF_NOT_SIMPLE = 2,
  BF_DEGENERATE = 3,
  BF_HYPOTHESIS = 4,
  BF_PARSE = 5,
  BF_IO = 6,
  BF_UNKNOWN_PRESET = 7,
  BF_DIMENSION_MISMATCH = 8,
  BF_INTERNAL = 9
} bf_status;

typedef struct bf_config bf_config;

BF_API const char* bf_last_error(void);
BF_API void bf_string_free(char* s);

BF_API bf_status bf_config_from_preset(const char* name, bf_config** out);
BF_API bf_status bf_config_from_json(const char* json, bf_config** out);
/* preset name, or a path to a JSON file */
BF_API bf_status bf_config_load(const char* source, bf_config** out);
BF_API void bf_config_free(bf_config* cfg);
BF_API size_t bf_config_size(const bf_config* cfg);

BF_API bf_status bf_report_describe(const bf_config* cfg, int pretty, char** out);
BF_API bf_status bf_report_cactus_check(const bf_config* cfg, int pretty, char** out);
BF_API bf_status bf_report_ordering(const bf_config* cfg, int pretty, char** out);
BF_API bf_status bf_report_lift_matrix(const bf_config* cfg, int pretty, char** out);
/* family: "circuit", "gc", "lifting" or "all" */
BF_API bf_status bf_report_generators(const bf_config* cfg, const char* family, uint64_t limit, int count_only,
                                      size_t depth, int pretty, char** out);
BF_API bf_status bf_generator_count(const bf_config* cfg, const char* family, size_t depth, uint64_t* out);
/* passed is set to 1 when every generator vanished on every sample */
BF_API bf_status bf_report_verify(const bf_config* cfg, size_t samples, uint64_t seed, uint64_t lifting_limit,
                                  size_t depth, int timings, int pretty, char** out, int* passed);
BF_API bf_status bf_report_decompose(const bf_config* cfg, int pretty, char** out);
BF_API bf_status bf_report_replay(int pretty, char** out, int* passed);

/* realization_json: {"labels": [...], "matrix": [[...],[...],[...]]} */
BF_API bf_status bf_in_circuit_variety(const bf_config* cfg, const char* realization_json, int* member);
BF_API bf_status bf_lift_dim(const bf_config* cfg, const char* realization_json, const char* q0, const char* q1,
                             const char* q2, size_t* out);

#ifdef __cplusplus
}
#endif

#endif
