// Copyright 2026 The lipkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to lipkit. Every call returns a lipkit_status; on failure the
 * message is available from lipkit_last_error() on the calling thread.
 * Handles are opaque and owned by the caller. */

#ifndef LIPKIT_LIPKIT_H_
#define LIPKIT_LIPKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LIPKIT_API __declspec(dllexport)
#else
#define LIPKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lipkit_status {
  LIPKIT_OK = 0,
  LIPKIT_INVALID_ARGUMENT = 1,
  LIPKIT_DIMENSION_MISMATCH = 2,
  LIPKIT_ASYMMETRIC_MATRIX = 3,
  LIPKIT_NEGATIVE_DISTANCE = 4,
  LIPKIT_ZERO_OFF_DIAGONAL = 5,
  LIPKIT_NONZERO_DIAGONAL = 6,
  LIPKIT_TRIANGLE_VIOLATION = 7,
  LIPKIT_EXPONENT_OUT_OF_RANGE = 8,
  LIPKIT_SINGLETON_SPACE = 9,
  LIPKIT_NOT_VANISHING_AT_BASE = 10,
  LIPKIT_BOUND_VIOLATED = 11,
  LIPKIT_EMPTY_SUBSET = 12,
  LIPKIT_DEGENERATE_PAIR = 13,
  LIPKIT_NON_UNIT_DIRECTION = 14,
  LIPKIT_NOT_IN_CLASS = 15,
  LIPKIT_RATIO_TOO_LARGE = 16,
  LIPKIT_UNBALANCED_MOLECULE = 17,
  LIPKIT_NON_INJECTIVE_MAP = 18,
  LIPKIT_EMPTY_SET = 19,
  LIPKIT_INVALID_CONFIG = 20,
  LIPKIT_INVARIANT_VIOLATION = 21,
  LIPKIT_PARSE_ERROR = 22,
  LIPKIT_IO_ERROR = 23,
  LIPKIT_INTERNAL = 24
} lipkit_status;

typedef struct lipkit_space lipkit_space;
typedef struct lipkit_function lipkit_function;
typedef struct lipkit_gauge lipkit_gauge;
typedef struct lipkit_certificate lipkit_certificate;

LIPKIT_API const char* lipkit_status_name(lipkit_status status);
LIPKIT_API const char* lipkit_last_error(void);

/* Metric spaces. matrix is n*n, row-major. */
LIPKIT_API lipkit_status lipkit_space_create(const double* matrix, size_t n, size_t base,
                                             lipkit_space** out);
LIPKIT_API lipkit_status lipkit_space_dyadic_chain(int k, lipkit_space** out);
LIPKIT_API lipkit_status lipkit_space_snowflake(const lipkit_space* space, double alpha,
                                                lipkit_space** out);
LIPKIT_API size_t lipkit_space_size(const lipkit_space* space);
LIPKIT_API double lipkit_space_dist(const lipkit_space* space, size_t i, size_t j);
LIPKIT_API lipkit_status lipkit_space_min_gap(const lipkit_space* space, double* value,
                                              size_t* i, size_t* j);
LIPKIT_API void lipkit_space_destroy(lipkit_space* space);

/* Pair gauges. */
LIPKIT_API lipkit_status lipkit_gauge_metric_power(const lipkit_space* space, double alpha,
                                                   lipkit_gauge** out);
LIPKIT_API lipkit_status lipkit_gauge_second_metric(const double* matrix, size_t n,
                                                    lipkit_gauge** out);
LIPKIT_API lipkit_status lipkit_gauge_ratio_inf(const lipkit_space* space,
                                                const lipkit_gauge* gauge, double* value,
                                                size_t* i, size_t* j);
LIPKIT_API void lipkit_gauge_destroy(lipkit_gauge* gauge);

/* Functions into (R^m, l2). values is n*m, row-major; the base row must be 0. */
LIPKIT_API lipkit_status lipkit_function_create(const lipkit_space* space, size_t m,
                                                const double* values, lipkit_function** out);
LIPKIT_API lipkit_status lipkit_function_lip_norm(const lipkit_function* f, double* out);
LIPKIT_API lipkit_status lipkit_function_seminorm(const lipkit_function* f,
                                                  const lipkit_gauge* gauge, double* out);
LIPKIT_API void lipkit_function_destroy(lipkit_function* f);

/* Escape certificates. */
LIPKIT_API lipkit_status lipkit_build_escape(const lipkit_function* f,
                                             const lipkit_gauge* gauge, double s, size_t i,
                                             size_t j, lipkit_certificate** out);
LIPKIT_API lipkit_status lipkit_certificate_values(const lipkit_certificate* cert, double* r,
                                                   double* radius, double* lower_bound);
/* passed is set to 1 when all five checks pass. */
LIPKIT_API lipkit_status lipkit_certificate_verify(const lipkit_certificate* cert, int* passed);
/* JSON text; free with lipkit_string_free. */
LIPKIT_API lipkit_status lipkit_certificate_to_json(const lipkit_certificate* cert, char** out);
LIPKIT_API lipkit_status lipkit_certificate_from_json(const char* json,
                                                     lipkit_certificate** out);
LIPKIT_API void lipkit_certificate_destroy(lipkit_certificate* cert);

/* Kantorovich-Rubinstein norm of the molecule sum_i weights[i] delta_i. */
LIPKIT_API lipkit_status lipkit_kr_norm(const lipkit_space* space, const double* weights,
                                        double* primal, double* dual);

/* Experiments. params_json is a JSON object; formats is comma separated
 * ("json,csv,svg"); out_dir may be NULL to skip writing. report receives the
 * JSON report when non-NULL; free with lipkit_string_free. */
LIPKIT_API lipkit_status lipkit_run_experiment(const char* name, const char* params_json,
                                               const char* out_dir, const char* formats,
                                               char** report);
/* report receives the JSON check report when non-NULL. */
LIPKIT_API lipkit_status lipkit_verify_certificate_file(const char* path, int* passed,
                                                        char** report);

LIPKIT_API void lipkit_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LIPKIT_LIPKIT_H_ */
