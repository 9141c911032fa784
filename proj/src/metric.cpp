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

#include "lipkit/metric.hpp"

#include <cmath>
#include <string>

#include "lipkit/error.hpp"

namespace lipkit {
namespace {

std::string PairText(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Shape, diagonal, sign and symmetry checks shared by metrics and raw gauges.
// Returns a copy with the lower triangle mirrored from the upper one.
DenseMatrix CheckPairMatrix(const DenseMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix must be square and non-empty");
  }
  const std::size_t n = m.rows();
  DenseMatrix out = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(m(i, i)) || m(i, i) != 0.0) {
      throw Error(ErrorCode::kNonzeroDiagonal, "diagonal entry " + PairText(i, i),
                  {i, i});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = m(i, j);
      const double b = m(j, i);
      if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorCode::kInvalidArgument, "non-finite entry " + PairText(i, j),
                    {i, j});
      }
      if (a < 0.0 || b < 0.0) {
        throw Error(ErrorCode::kNegativeDistance, "entry " + PairText(i, j), {i, j});
      }
      if (std::fabs(a - b) > kMetricTolerance) {
        throw Error(ErrorCode::kAsymmetricMatrix, "entry " + PairText(i, j), {i, j});
      }
      if (a == 0.0 || b == 0.0) {
        throw Error(ErrorCode::kZeroOffDiagonal, "entry " + PairText(i, j), {i, j});
      }
      out(j, i) = a;
    }
  }
  return out;
}

void CheckTriangle(const DenseMatrix& d) {
  const std::size_t n = d.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (d(i, j) > d(i, k) + d(k, j) + kMetricTolerance) {
          throw Error(ErrorCode::kTriangleViolation,
                      "d" + PairText(i, j) + " > d" + PairText(i, k) + " + d" +
                          PairText(k, j),
                      {i, j, k});
        }
      }
    }
  }
}

void CheckExponent(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kExponentOutOfRange,
                "exponent must lie in (0, 1], got " + std::to_string(alpha));
  }
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::Validate(const DenseMatrix& matrix,
                                              std::size_t base) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "distance matrix must be square, n >= 1");
  }
  if (base >= matrix.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "base point index out of range");
  }
  DenseMatrix d = CheckPairMatrix(matrix);
  CheckTriangle(d);
  return FiniteMetricSpace(std::move(d), base);
}

SpacePtr MakeSpace(FiniteMetricSpace space) {
  return std::make_shared<const FiniteMetricSpace>(std::move(space));
}

FiniteMetricSpace Snowflake(const FiniteMetricSpace& space, double alpha) {
  CheckExponent(alpha);
  DenseMatrix d = space.matrix();
  if (alpha != 1.0) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) = std::pow(d(i, j), alpha);
    }
  }
  return FiniteMetricSpace::Validate(d, space.base());
}

FiniteMetricSpace DyadicChain(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "dyadic chain needs K >= 1");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) x[i] = std::ldexp(1.0, -static_cast<int>(i));
  DenseMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d(i, j) = std::fabs(x[i] - x[j]);
  }
  return FiniteMetricSpace::Validate(d, 0);
}

PairValue MinGap(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 2) throw Error(ErrorCode::kSingletonSpace, "min gap needs two points");
  PairValue best{space.dist(0, 1), {0, 1}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (space.dist(i, j) < best.value) best = {space.dist(i, j), {i, j}};
    }
  }
  return best;
}

GaugePair GaugePair::MetricPower(const FiniteMetricSpace& space, double alpha) {
  CheckExponent(alpha);
  DenseMatrix v = space.matrix();
  if (alpha != 1.0) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
      for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = std::pow(v(i, j), alpha);
    }
  }
  return GaugePair(Kind::kMetricPower, alpha, std::move(v));
}

GaugePair GaugePair::SecondMetric(const DenseMatrix& values) {
  DenseMatrix v = CheckPairMatrix(values);
  CheckTriangle(v);
  return GaugePair(Kind::kSecondMetric, std::nullopt, std::move(v));
}

GaugePair GaugePair::Raw(const DenseMatrix& values) {
  return GaugePair(Kind::kRaw, std::nullopt, CheckPairMatrix(values));
}

GaugePair GaugePair::Restore(Kind kind, std::optional<double> alpha,
                             const DenseMatrix& values) {
  switch (kind) {
    case Kind::kSecondMetric: return SecondMetric(values);
    case Kind::kRaw: return Raw(values);
    case Kind::kMetricPower:
      if (!alpha) throw Error(ErrorCode::kInvalidArgument, "power gauge needs alpha");
      CheckExponent(*alpha);
      return GaugePair(kind, alpha, CheckPairMatrix(values));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown gauge kind");
}

PairValue GaugeRatioInf(const FiniteMetricSpace& space, const GaugePair& gauge) {
  const std::size_t n = space.size();
  if (gauge.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "gauge and space sizes differ");
  }
  if (n < 2) throw Error(ErrorCode::kSingletonSpace, "ratio needs two points");
  PairValue best{gauge(0, 1) / space.dist(0, 1), {0, 1}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = gauge(i, j) / space.dist(i, j);
      if (r < best.value) best = {r, {i, j}};
    }
  }
  return best;
}

}  // namespace lipkit
