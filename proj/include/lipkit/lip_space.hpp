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

#ifndef LIPKIT_LIP_SPACE_HPP_
#define LIPKIT_LIP_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lipkit/dense_matrix.hpp"
#include "lipkit/metric.hpp"

namespace lipkit {

enum class NormKind { kL1, kL2, kLinf };

double Norm(std::span<const double> v, NormKind kind);

// Finite-dimensional coordinate target (R^m, norm).
struct TargetSpace {
  std::size_t m = 1;
  NormKind norm = NormKind::kL2;

  static TargetSpace Scalar() { return {1, NormKind::kL2}; }
  bool operator==(const TargetSpace&) const = default;
};

// Vector-valued function on the points of a space; row i holds f(point i).
// The base row is exactly zero.
class PointFunction {
 public:
  PointFunction(SpacePtr space, TargetSpace target, DenseMatrix values);

  static PointFunction Zero(SpacePtr space, TargetSpace target);
  static PointFunction Scalar(SpacePtr space, const std::vector<double>& values);

  const SpacePtr& space() const { return space_; }
  const TargetSpace& target() const { return target_; }
  const DenseMatrix& values() const { return values_; }
  std::span<const double> at(std::size_t i) const { return values_.row(i); }
  // Norm of f(i) - f(j) in the target.
  double GapNorm(std::size_t i, std::size_t j) const;

  PointFunction operator+(const PointFunction& other) const;
  PointFunction operator-(const PointFunction& other) const;
  PointFunction Scaled(double factor) const;

  bool operator==(const PointFunction& other) const {
    return *space_ == *other.space_ && target_ == other.target_ &&
           values_ == other.values_;
  }

 private:
  void CheckCompatible(const PointFunction& other) const;

  SpacePtr space_;
  TargetSpace target_;
  DenseMatrix values_;
};

struct ClassParams {
  ClassParams(GaugePair gauge, double s);
  GaugePair gauge;
  double s;
};

// Exact max over pairs of ||f(x) - f(x')|| / d(x,x').
PairValue LipNorm(const PointFunction& f);
// Exact max over pairs of ||f(x) - f(x')|| / phi(x,x').
PairValue GaugeSeminorm(const PointFunction& f, const GaugePair& gauge);
// gauge_seminorm <= s (non-strict).
bool InClass(const PointFunction& f, const ClassParams& params);

// Inf-convolution extension of a scalar g given on subset with Lipschitz
// bound L: f(y) = min_{y' in S} g(y') + L d(y, y'). On S the result equals g.
// When the base is not in S the whole function is shifted by -f(base).
PointFunction McShaneExtend(const SpacePtr& space, std::span<const std::size_t> subset,
                            std::span<const double> values, double lipschitz_bound);

// Uniform coordinates in [-1,1]^m, zero base row, then rescaled so that the
// phi-seminorm is at most bound. Deterministic in seed.
PointFunction SampleInClass(const SpacePtr& space, TargetSpace target,
                            const GaugePair& gauge, double bound, std::uint64_t seed);
// SampleInClass with phi = d^beta.
PointFunction SampleFunction(const SpacePtr& space, TargetSpace target, double beta,
                             double bound, std::uint64_t seed);

}  // namespace lipkit

#endif  // LIPKIT_LIP_SPACE_HPP_
