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

#include "lipkit/lipkit.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "lipkit/error.hpp"
#include "lipkit/experiments.hpp"
#include "lipkit/free_space.hpp"
#include "lipkit/porosity.hpp"
#include "lipkit/serialization.hpp"

struct lipkit_space {
  lipkit::SpacePtr space;
};

struct lipkit_function {
  lipkit::PointFunction f;
};

struct lipkit_gauge {
  lipkit::GaugePair gauge;
};

struct lipkit_certificate {
  lipkit::EscapeCertificate cert;
};

namespace {

using lipkit::ErrorCode;

#define LIPKIT_SAME(c, e)   static_assert(static_cast<int>(ErrorCode::c) == static_cast<int>(e), #c)
LIPKIT_SAME(kOk, LIPKIT_OK);
LIPKIT_SAME(kInvalidArgument, LIPKIT_INVALID_ARGUMENT);
LIPKIT_SAME(kDimensionMismatch, LIPKIT_DIMENSION_MISMATCH);
LIPKIT_SAME(kAsymmetricMatrix, LIPKIT_ASYMMETRIC_MATRIX);
LIPKIT_SAME(kNegativeDistance, LIPKIT_NEGATIVE_DISTANCE);
LIPKIT_SAME(kZeroOffDiagonal, LIPKIT_ZERO_OFF_DIAGONAL);
LIPKIT_SAME(kNonzeroDiagonal, LIPKIT_NONZERO_DIAGONAL);
LIPKIT_SAME(kTriangleViolation, LIPKIT_TRIANGLE_VIOLATION);
LIPKIT_SAME(kExponentOutOfRange, LIPKIT_EXPONENT_OUT_OF_RANGE);
LIPKIT_SAME(kSingletonSpace, LIPKIT_SINGLETON_SPACE);
LIPKIT_SAME(kNotVanishingAtBase, LIPKIT_NOT_VANISHING_AT_BASE);
LIPKIT_SAME(kBoundViolated, LIPKIT_BOUND_VIOLATED);
LIPKIT_SAME(kEmptySubset, LIPKIT_EMPTY_SUBSET);
LIPKIT_SAME(kDegeneratePair, LIPKIT_DEGENERATE_PAIR);
LIPKIT_SAME(kNonUnitDirection, LIPKIT_NON_UNIT_DIRECTION);
LIPKIT_SAME(kNotInClass, LIPKIT_NOT_IN_CLASS);
LIPKIT_SAME(kRatioTooLarge, LIPKIT_RATIO_TOO_LARGE);
LIPKIT_SAME(kUnbalancedMolecule, LIPKIT_UNBALANCED_MOLECULE);
LIPKIT_SAME(kNonInjectiveMap, LIPKIT_NON_INJECTIVE_MAP);
LIPKIT_SAME(kEmptySet, LIPKIT_EMPTY_SET);
LIPKIT_SAME(kInvalidConfig, LIPKIT_INVALID_CONFIG);
LIPKIT_SAME(kInvariantViolation, LIPKIT_INVARIANT_VIOLATION);
LIPKIT_SAME(kParseError, LIPKIT_PARSE_ERROR);
LIPKIT_SAME(kIoError, LIPKIT_IO_ERROR);
LIPKIT_SAME(kInternal, LIPKIT_INTERNAL);
#undef LIPKIT_SAME

thread_local std::string g_last_error;

lipkit_status Fail(lipkit_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Body>
lipkit_status Guard(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return LIPKIT_OK;
  } catch (const lipkit::Error& e) {
    return Fail(static_cast<lipkit_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(LIPKIT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(LIPKIT_INTERNAL, e.what());
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw lipkit::Error(ErrorCode::kInvalidArgument, what);
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lipkit::DenseMatrix Square(const double* matrix, size_t n) {
  lipkit::DenseMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m(i, j) = matrix[i * n + j];
  }
  return m;
}

}  // namespace

extern "C" {

const char* lipkit_status_name(lipkit_status status) {
  return lipkit::ErrorCodeName(static_cast<ErrorCode>(status));
}

const char* lipkit_last_error(void) { return g_last_error.c_str(); }

lipkit_status lipkit_space_create(const double* matrix, size_t n, size_t base,
                                  lipkit_space** out) {
  return Guard([&] {
    Require(out != nullptr && (matrix != nullptr || n == 0), "null pointer");
    auto space = lipkit::MakeSpace(lipkit::FiniteMetricSpace::Validate(Square(matrix, n), base));
    *out = new lipkit_space{std::move(space)};
  });
}

lipkit_status lipkit_space_dyadic_chain(int k, lipkit_space** out) {
  return Guard([&] {
    Require(out != nullptr, "null pointer");
    *out = new lipkit_space{lipkit::MakeSpace(lipkit::DyadicChain(k))};
  });
}

lipkit_status lipkit_space_snowflake(const lipkit_space* space, double alpha,
                                     lipkit_space** out) {
  return Guard([&] {
    Require(space != nullptr && out != nullptr, "null pointer");
    *out = new lipkit_space{lipkit::MakeSpace(lipkit::Snowflake(*space->space, alpha))};
  });
}

size_t lipkit_space_size(const lipkit_space* space) {
  return space ? space->space->size() : 0;
}

double lipkit_space_dist(const lipkit_space* space, size_t i, size_t j) {
  if (!space || i >= space->space->size() || j >= space->space->size()) return -1.0;
  return space->space->dist(i, j);
}

lipkit_status lipkit_space_min_gap(const lipkit_space* space, double* value, size_t* i,
                                   size_t* j) {
  return Guard([&] {
    Require(space && value && i && j, "null pointer");
    const lipkit::PairValue gap = lipkit::MinGap(*space->space);
    *value = gap.value;
    *i = gap.pair.i;
    *j = gap.pair.j;
  });
}

void lipkit_space_destroy(lipkit_space* space) { delete space; }

lipkit_status lipkit_gauge_metric_power(const lipkit_space* space, double alpha,
                                        lipkit_gauge** out) {
  return Guard([&] {
    Require(space && out, "null pointer");
    *out = new lipkit_gauge{lipkit::GaugePair::MetricPower(*space->space, alpha)};
  });
}

lipkit_status lipkit_gauge_second_metric(const double* matrix, size_t n, lipkit_gauge** out) {
  return Guard([&] {
    Require(matrix && out, "null pointer");
    *out = new lipkit_gauge{lipkit::GaugePair::SecondMetric(Square(matrix, n))};
  });
}

lipkit_status lipkit_gauge_ratio_inf(const lipkit_space* space, const lipkit_gauge* gauge,
                                     double* value, size_t* i, size_t* j) {
  return Guard([&] {
    Require(space && gauge && value && i && j, "null pointer");
    const lipkit::PairValue r = lipkit::GaugeRatioInf(*space->space, gauge->gauge);
    *value = r.value;
    *i = r.pair.i;
    *j = r.pair.j;
  });
}

void lipkit_gauge_destroy(lipkit_gauge* gauge) { delete gauge; }

lipkit_status lipkit_function_create(const lipkit_space* space, size_t m, const double* values,
                                     lipkit_function** out) {
  return Guard([&] {
    Require(space && values && out, "null pointer");
    const size_t n = space->space->size();
    lipkit::DenseMatrix v(n, m);
    for (size_t i = 0; i < n; ++i) {
      for (size_t c = 0; c < m; ++c) v(i, c) = values[i * m + c];
    }
    *out = new lipkit_function{
        lipkit::PointFunction(space->space, {m, lipkit::NormKind::kL2}, std::move(v))};
  });
}

lipkit_status lipkit_function_lip_norm(const lipkit_function* f, double* out) {
  return Guard([&] {
    Require(f && out, "null pointer");
    *out = lipkit::LipNorm(f->f).value;
  });
}

lipkit_status lipkit_function_seminorm(const lipkit_function* f, const lipkit_gauge* gauge,
                                       double* out) {
  return Guard([&] {
    Require(f && gauge && out, "null pointer");
    *out = lipkit::GaugeSeminorm(f->f, gauge->gauge).value;
  });
}

void lipkit_function_destroy(lipkit_function* f) { delete f; }

lipkit_status lipkit_build_escape(const lipkit_function* f, const lipkit_gauge* gauge, double s,
                                  size_t i, size_t j, lipkit_certificate** out) {
  return Guard([&] {
    Require(f && gauge && out, "null pointer");
    const lipkit::ClassParams params(gauge->gauge, s);
    *out = new lipkit_certificate{lipkit::BuildEscape(f->f, params, lipkit::PointPair{i, j})};
  });
}

lipkit_status lipkit_certificate_values(const lipkit_certificate* cert, double* r,
                                        double* radius, double* lower_bound) {
  return Guard([&] {
    Require(cert != nullptr, "null pointer");
    if (r) *r = cert->cert.r;
    if (radius) *radius = cert->cert.radius;
    if (lower_bound) *lower_bound = cert->cert.lower_bound;
  });
}

lipkit_status lipkit_certificate_verify(const lipkit_certificate* cert, int* passed) {
  return Guard([&] {
    Require(cert && passed, "null pointer");
    *passed = lipkit::VerifyCertificate(cert->cert).AllPassed() ? 1 : 0;
  });
}

lipkit_status lipkit_certificate_to_json(const lipkit_certificate* cert, char** out) {
  return Guard([&] {
    Require(cert && out, "null pointer");
    *out = CopyString(lipkit::ToJson(cert->cert).dump());
  });
}

lipkit_status lipkit_certificate_from_json(const char* json, lipkit_certificate** out) {
  return Guard([&] {
    Require(json && out, "null pointer");
    lipkit::Json j;
    try {
      j = lipkit::Json::parse(json);
    } catch (const lipkit::Json::exception& e) {
      throw lipkit::Error(ErrorCode::kParseError, e.what());
    }
    *out = new lipkit_certificate{lipkit::CertificateFromJson(j)};
  });
}

void lipkit_certificate_destroy(lipkit_certificate* cert) { delete cert; }

lipkit_status lipkit_kr_norm(const lipkit_space* space, const double* weights, double* primal,
                             double* dual) {
  return Guard([&] {
    Require(space && weights, "null pointer");
    const lipkit::Molecule m(space->space,
                             std::vector<double>(weights, weights + space->space->size()));
    if (primal) *primal = lipkit::KrNormPrimal(m).value;
    if (dual) *dual = lipkit::KrNormDual(m).value;
  });
}

lipkit_status lipkit_run_experiment(const char* name, const char* params_json,
                                    const char* out_dir, const char* formats, char** report) {
  return Guard([&] {
    Require(name && params_json, "null pointer");
    lipkit::ExperimentConfig config;
    config.name = name;
    try {
      config.params = lipkit::Json::parse(params_json);
    } catch (const lipkit::Json::exception& e) {
      throw lipkit::Error(ErrorCode::kInvalidConfig, std::string("parameters: ") + e.what());
    }
    if (out_dir) config.output = out_dir;
    if (formats) {
      config.formats.clear();
      std::stringstream ss(formats);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) config.formats.insert(item);
      }
    }
    const lipkit::ExperimentOutput out = lipkit::RunExperiment(config);
    if (report) *report = CopyString(out.report.dump());
  });
}

lipkit_status lipkit_verify_certificate_file(const char* path, int* passed, char** report) {
  return Guard([&] {
    Require(path && passed, "null pointer");
    const lipkit::CheckReport checks = lipkit::VerifyCertificateFile(path);
    *passed = checks.AllPassed() ? 1 : 0;
    if (report) *report = CopyString(lipkit::ToJson(checks).dump());
  });
}

void lipkit_string_free(char* s) { delete[] s; }

}  // extern "C"
