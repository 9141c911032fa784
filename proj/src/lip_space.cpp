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

#include "lipkit/lip_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lipkit/error.hpp"
#include "lipkit/random.hpp"

namespace lipkit {
namespace {

// Pair scan shared by LipNorm and GaugeSeminorm; strict > keeps the
// lexicographically first maximizer.
template <typename Denominator>
PairValue MaxPairRatio(const PointFunction& f, Denominator denom) {
  const std::size_t n = f.space()->size();
  if (n < 2) throw Error(ErrorCode::kSingletonSpace, "seminorm needs two points");
  PairValue best{-1.0, {0, 1}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = f.GapNorm(i, j) / denom(i, j);
      if (r > best.value) best = {r, {i, j}};
    }
  }
  return best;
}

}  // namespace

double Norm(std::span<const double> v, NormKind kind) {
  double acc = 0.0;
  switch (kind) {
    case NormKind::kL1:
      for (double x : v) acc += std::fabs(x);
      return acc;
    case NormKind::kL2:
      for (double x : v) acc += x * x;
      return std::sqrt(acc);
    case NormKind::kLinf:
      for (double x : v) acc = std::max(acc, std::fabs(x));
      return acc;
  }
  return acc;
}

PointFunction::PointFunction(SpacePtr space, TargetSpace target, DenseMatrix values)
    : space_(std::move(space)), target_(target), values_(std::move(values)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "null space");
  if (target_.m < 1) throw Error(ErrorCode::kInvalidArgument, "target dimension m >= 1");
  if (values_.rows() != space_->size() || values_.cols() != target_.m) {
    throw Error(ErrorCode::kDimensionMismatch, "values must be n x m");
  }
  for (double v : values_.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite value");
  }
  for (double v : values_.row(space_->base())) {
    if (v != 0.0) {
      throw Error(ErrorCode::kNotVanishingAtBase, "f(base) must be the zero vector",
                  {space_->base()});
    }
  }
}

PointFunction PointFunction::Zero(SpacePtr space, TargetSpace target) {
  const std::size_t n = space->size();
  return PointFunction(std::move(space), target, DenseMatrix(n, target.m));
}

PointFunction PointFunction::Scalar(SpacePtr space, const std::vector<double>& values) {
  DenseMatrix v(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) v(i, 0) = values[i];
  return PointFunction(std::move(space), TargetSpace::Scalar(), std::move(v));
}

double PointFunction::GapNorm(std::size_t i, std::size_t j) const {
  if (target_.m == 1) return std::fabs(values_(i, 0) - values_(j, 0));
  std::vector<double> diff(target_.m);
  for (std::size_t c = 0; c < target_.m; ++c) diff[c] = values_(i, c) - values_(j, c);
  return Norm(diff, target_.norm);
}

void PointFunction::CheckCompatible(const PointFunction& other) const {
  if (!(target_ == other.target_) ||
      (space_ != other.space_ && !(*space_ == *other.space_))) {
    throw Error(ErrorCode::kDimensionMismatch, "functions live on different spaces");
  }
}

PointFunction PointFunction::operator+(const PointFunction& other) const {
  CheckCompatible(other);
  DenseMatrix v = values_;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t c = 0; c < v.cols(); ++c) v(i, c) += other.values_(i, c);
  }
  return PointFunction(space_, target_, std::move(v));
}

PointFunction PointFunction::operator-(const PointFunction& other) const {
  CheckCompatible(other);
  DenseMatrix v = values_;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t c = 0; c < v.cols(); ++c) v(i, c) -= other.values_(i, c);
  }
  return PointFunction(space_, target_, std::move(v));
}

PointFunction PointFunction::Scaled(double factor) const {
  DenseMatrix v = values_;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t c = 0; c < v.cols(); ++c) v(i, c) *= factor;
  }
  // -0.0 * 0 stays a zero, so the base row still vanishes.
  for (double& x : v.row(space_->base())) x = 0.0;
  return PointFunction(space_, target_, std::move(v));
}

ClassParams::ClassParams(GaugePair gauge_in, double s_in)
    : gauge(std::move(gauge_in)), s(s_in) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kInvalidArgument, "class bound s must be positive");
  }
}

PairValue LipNorm(const PointFunction& f) {
  const FiniteMetricSpace& space = *f.space();
  return MaxPairRatio(f, [&](std::size_t i, std::size_t j) { return space.dist(i, j); });
}

PairValue GaugeSeminorm(const PointFunction& f, const GaugePair& gauge) {
  if (gauge.size() != f.space()->size()) {
    throw Error(ErrorCode::kDimensionMismatch, "gauge does not match the space");
  }
  return MaxPairRatio(f, [&](std::size_t i, std::size_t j) { return gauge(i, j); });
}

bool InClass(const PointFunction& f, const ClassParams& params) {
  if (f.space()->size() < 2) return true;
  return GaugeSeminorm(f, params.gauge).value <= params.s;
}

PointFunction McShaneExtend(const SpacePtr& space, std::span<const std::size_t> subset,
                            std::span<const double> values, double lipschitz_bound) {
  if (subset.empty()) throw Error(ErrorCode::kEmptySubset, "extension needs S nonempty");
  if (subset.size() != values.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "subset and values differ in length");
  }
  if (!(lipschitz_bound >= 0.0) || !std::isfinite(lipschitz_bound)) {
    throw Error(ErrorCode::kInvalidArgument, "Lipschitz bound must be finite, >= 0");
  }
  const std::size_t n = space->size();
  std::vector<char> in_subset(n, 0);
  std::vector<double> f(n, 0.0);
  for (std::size_t t = 0; t < subset.size(); ++t) {
    const std::size_t i = subset[t];
    if (i >= n) throw Error(ErrorCode::kInvalidArgument, "subset index out of range");
    if (in_subset[i]) throw Error(ErrorCode::kInvalidArgument, "duplicate subset index");
    if (!std::isfinite(values[t])) throw Error(ErrorCode::kInvalidArgument, "non-finite g");
    in_subset[i] = 1;
    f[i] = values[t];
  }
  if (in_subset[space->base()] && f[space->base()] != 0.0) {
    throw Error(ErrorCode::kNotVanishingAtBase, "g(base) must be 0", {space->base()});
  }
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      const std::size_t i = subset[a];
      const std::size_t j = subset[b];
      const double gap = std::fabs(f[i] - f[j]);
      const double allowed = lipschitz_bound * space->dist(i, j);
      if (gap > allowed + kMetricTolerance * std::max(1.0, gap)) {
        throw Error(ErrorCode::kBoundViolated,
                    "|g(" + std::to_string(i) + ") - g(" + std::to_string(j) +
                        ")| exceeds L d",
                    {std::min(i, j), std::max(i, j)});
      }
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    if (in_subset[y]) continue;
    double best = f[subset[0]] + lipschitz_bound * space->dist(y, subset[0]);
    for (std::size_t t = 1; t < subset.size(); ++t) {
      best = std::min(best, f[subset[t]] + lipschitz_bound * space->dist(y, subset[t]));
    }
    f[y] = best;
  }
  const double shift = f[space->base()];
  if (shift != 0.0) {
    for (double& v : f) v -= shift;
    f[space->base()] = 0.0;
  }
  return PointFunction::Scalar(space, f);
}

PointFunction SampleInClass(const SpacePtr& space, TargetSpace target,
                            const GaugePair& gauge, double bound, std::uint64_t seed) {
  if (!(bound > 0.0)) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  if (gauge.size() != space->size()) {
    throw Error(ErrorCode::kDimensionMismatch, "gauge does not match the space");
  }
  Rng rng(seed);
  DenseMatrix v(space->size(), target.m);
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t c = 0; c < v.cols(); ++c) v(i, c) = rng.Uniform(-1.0, 1.0);
  }
  for (double& x : v.row(space->base())) x = 0.0;
  PointFunction f(space, target, std::move(v));
  if (space->size() < 2) return f;
  const double current = GaugeSeminorm(f, gauge).value;
  f = f.Scaled(bound / std::max(1.0, current));
  // Rounding in the rescale can overshoot the bound by an ulp.
  while (GaugeSeminorm(f, gauge).value > bound) f = f.Scaled(1.0 - 0x1.0p-50);
  return f;
}

PointFunction SampleFunction(const SpacePtr& space, TargetSpace target, double beta,
                             double bound, std::uint64_t seed) {
  return SampleInClass(space, target, GaugePair::MetricPower(*space, beta), bound, seed);
}

}  // namespace lipkit
