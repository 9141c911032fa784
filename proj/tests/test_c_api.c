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

/* Exercises the shared library through the C header only. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "lipkit/lipkit.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  lipkit_space* chain = NULL;
  lipkit_space* flake = NULL;
  lipkit_gauge* gauge = NULL;
  lipkit_function* zero = NULL;
  lipkit_certificate* cert = NULL;
  lipkit_certificate* back = NULL;
  double value = 0, r = 0, radius = 0, lower = 0;
  size_t i = 0, j = 0;
  int passed = 0;
  char* text = NULL;

  EXPECT(lipkit_space_dyadic_chain(20, &chain) == LIPKIT_OK);
  EXPECT(lipkit_space_size(chain) == 21);
  EXPECT(lipkit_space_min_gap(chain, &value, &i, &j) == LIPKIT_OK);
  EXPECT(value == ldexp(1.0, -20) && i == 0 && j == 20);
  EXPECT(lipkit_space_snowflake(chain, 0.5, &flake) == LIPKIT_OK);
  EXPECT(lipkit_gauge_metric_power(chain, 1.0, &gauge) == LIPKIT_OK);
  EXPECT(lipkit_gauge_ratio_inf(flake, gauge, &value, &i, &j) == LIPKIT_OK);

  double values[21] = {0};
  EXPECT(lipkit_function_create(flake, 1, values, &zero) == LIPKIT_OK);
  EXPECT(lipkit_build_escape(zero, gauge, 1.0, i, j, &cert) == LIPKIT_OK);
  EXPECT(lipkit_certificate_values(cert, &r, &radius, &lower) == LIPKIT_OK);
  EXPECT(r == ldexp(1.0, -10));
  EXPECT(lower == 15.0);
  EXPECT(fabs(radius - 0.015625) < 1e-15);
  EXPECT(lipkit_certificate_verify(cert, &passed) == LIPKIT_OK && passed == 1);
  EXPECT(lipkit_certificate_to_json(cert, &text) == LIPKIT_OK);
  EXPECT(lipkit_certificate_from_json(text, &back) == LIPKIT_OK);
  EXPECT(lipkit_certificate_verify(back, &passed) == LIPKIT_OK && passed == 1);
  lipkit_string_free(text);

  /* The threshold is strict: s = 8 gives 1/(16 s^2) = 2^-10 = r. */
  lipkit_certificate* rejected = NULL;
  EXPECT(lipkit_build_escape(zero, gauge, 8.0, i, j, &rejected) == LIPKIT_RATIO_TOO_LARGE);
  EXPECT(rejected == NULL);
  EXPECT(strstr(lipkit_last_error(), "RatioTooLarge") != NULL);
  EXPECT(strcmp(lipkit_status_name(LIPKIT_TRIANGLE_VIOLATION), "TriangleViolation") == 0);

  const double bad[9] = {0, 1, 3, 1, 0, 1, 3, 1, 0};
  lipkit_space* broken = NULL;
  EXPECT(lipkit_space_create(bad, 3, 0, &broken) == LIPKIT_TRIANGLE_VIOLATION);

  const double line[9] = {0, 0.5, 0.25, 0.5, 0, 0.25, 0.25, 0.25, 0};
  lipkit_space* three = NULL;
  double primal = 0, dual = 0;
  const double weights[3] = {-2, 1, 1};
  EXPECT(lipkit_space_create(line, 3, 0, &three) == LIPKIT_OK);
  EXPECT(lipkit_kr_norm(three, weights, &primal, &dual) == LIPKIT_OK);
  EXPECT(fabs(primal - 0.75) < 1e-12 && fabs(dual - 0.75) < 1e-9);
  const double unbalanced[3] = {1, 1, 1};
  EXPECT(lipkit_kr_norm(three, unbalanced, &primal, &dual) == LIPKIT_UNBALANCED_MOLECULE);

  char* report = NULL;
  EXPECT(lipkit_run_experiment("dual-thinness",
                               "{\"n_min\": 17, \"n_max\": 17, \"s\": 1.0, \"seed\": 1}", NULL,
                               "json", &report) == LIPKIT_OK);
  EXPECT(report != NULL && strstr(report, "certified") != NULL);
  lipkit_string_free(report);
  EXPECT(lipkit_run_experiment("snowflake", "{\"alpha\": 0.5}", NULL, "json", NULL) ==
         LIPKIT_INVALID_CONFIG);
  EXPECT(lipkit_run_experiment("snowflake", "not json", NULL, "json", NULL) ==
         LIPKIT_INVALID_CONFIG);
  EXPECT(lipkit_verify_certificate_file("/nonexistent/cert.json", &passed, NULL) ==
         LIPKIT_IO_ERROR);
  EXPECT(lipkit_space_dyadic_chain(3, NULL) == LIPKIT_INVALID_ARGUMENT);

  lipkit_space_destroy(three);
  lipkit_certificate_destroy(back);
  lipkit_certificate_destroy(cert);
  lipkit_function_destroy(zero);
  lipkit_gauge_destroy(gauge);
  lipkit_space_destroy(flake);
  lipkit_space_destroy(chain);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
