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

#ifndef LIPKIT_METRIC_HPP_
#define LIPKIT_METRIC_HPP_

#include <cstddef>
#include <memory>
#include <optional>

#include "lipkit/dense_matrix.hpp"

namespace lipkit {

// Absolute tolerance for symmetry and triangle checks on distance matrices.
inline constexpr double kMetricTolerance = 1e-12;

// A validated finite pointed metric space. Points are indexed 0..n-1 and
// one of them is the base point. Immutable once built.
class FiniteMetricSpace {
 public:
  // Checks every metric axiom and throws lipkit::Error on the first failure.
  // Triangle violations report indices (i, j, k) with d(i,j) > d(i,k)+d(k,j).
  static FiniteMetricSpace Validate(const DenseMatrix& matrix, std::size_t base);

  std::size_t size() const { return n_; }
  std::size_t base() const { return base_; }
  double dist(std::size_t i, std::size_t j) const { return dist_(i, j); }
  const DenseMatrix& matrix() const { return dist_; }

  bool operator==(const FiniteMetricSpace&) const = default;

 private:
  FiniteMetricSpace(DenseMatrix dist, std::size_t base)
      : n_(dist.rows()), base_(base), dist_(std::move(dist)) {}

  std::size_t n_;
  std::size_t base_;
  DenseMatrix dist_;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

SpacePtr MakeSpace(FiniteMetricSpace space);

// Returns the space with distances d^alpha, 0 < alpha <= 1, re-validated.
FiniteMetricSpace Snowflake(const FiniteMetricSpace& space, double alpha);

// Points {0} U {2^-k : 1 <= k <= K} on the line; index 0 is the base point 0
// and index k holds 2^-k.
FiniteMetricSpace DyadicChain(int k);

struct PairValue {
  double value = 0.0;
  PointPair pair;
};

// Smallest off-diagonal distance; ties go to the lexicographically smallest
// pair.
PairValue MinGap(const FiniteMetricSpace& space);

// A positive symmetric pair function phi, zero exactly on the diagonal,
// stored as a full matrix.
class GaugePair {
 public:
  enum class Kind { kMetricPower, kSecondMetric, kRaw };

  // values = dist^alpha of the given space.
  static GaugePair MetricPower(const FiniteMetricSpace& space, double alpha);
  // values must form a metric on the same point set.
  static GaugePair SecondMetric(const DenseMatrix& values);
  // Only positivity, symmetry and the zero diagonal are required.
  static GaugePair Raw(const DenseMatrix& values);
  // Rebuilds a stored gauge of any kind from its materialized values.
  static GaugePair Restore(Kind kind, std::optional<double> alpha,
                           const DenseMatrix& values);

  Kind kind() const { return kind_; }
  std::optional<double> alpha() const { return alpha_; }
  std::size_t size() const { return values_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  const DenseMatrix& values() const { return values_; }

  bool operator==(const GaugePair&) const = default;

 private:
  GaugePair(Kind kind, std::optional<double> alpha, DenseMatrix values)
      : kind_(kind), alpha_(alpha), values_(std::move(values)) {}

  Kind kind_;
  std::optional<double> alpha_;
  DenseMatrix values_;
};

// r* = min over pairs of phi(x,x') / d(x,x') with a lexicographic tie-break.
PairValue GaugeRatioInf(const FiniteMetricSpace& space, const GaugePair& gauge);

}  // namespace lipkit

#endif  // LIPKIT_METRIC_HPP_
