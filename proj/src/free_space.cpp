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

#include "lipkit/free_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lipkit/error.hpp"
#include "lipkit/lp.hpp"

namespace lipkit {

Molecule::Molecule(SpacePtr space, std::vector<double> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "null space");
  if (weights_.size() != space_->size()) {
    throw Error(ErrorCode::kDimensionMismatch, "molecule needs one weight per point");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w)) throw Error(ErrorCode::kInvalidArgument, "non-finite weight");
    sum += w;
  }
  if (std::fabs(sum) > kMoleculeTolerance) {
    throw Error(ErrorCode::kUnbalancedMolecule, "weights sum to " + std::to_string(sum));
  }
}

Molecule Molecule::FromCombination(SpacePtr space, std::vector<double> coeffs) {
  if (coeffs.size() != space->size()) {
    throw Error(ErrorCode::kDimensionMismatch, "molecule needs one weight per point");
  }
  const std::size_t base = space->base();
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i != base) sum += coeffs[i];
  }
  coeffs[base] = -sum;
  return Molecule(std::move(space), std::move(coeffs));
}

Molecule Molecule::DiracDifference(SpacePtr space, std::size_t x, std::size_t y) {
  if (x >= space->size() || y >= space->size()) {
    throw Error(ErrorCode::kInvalidArgument, "point index out of range");
  }
  std::vector<double> w(space->size(), 0.0);
  w[x] += 1.0;
  w[y] -= 1.0;
  return Molecule(std::move(space), std::move(w));
}

Molecule Molecule::operator+(const Molecule& other) const {
  if (space_ != other.space_ && !(*space_ == *other.space_)) {
    throw Error(ErrorCode::kDimensionMismatch, "molecules on different spaces");
  }
  std::vector<double> w = weights_;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += other.weights_[i];
  return FromCombination(space_, std::move(w));
}

KrPrimal KrNormPrimal(const Molecule& m) {
  const FiniteMetricSpace& space = *m.space();
  std::vector<std::size_t> pos, neg;
  std::vector<double> supply, demand;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double w = m.weights()[i];
    if (w > 0.0) {
      pos.push_back(i);
      supply.push_back(w);
    } else if (w < 0.0) {
      neg.push_back(i);
      demand.push_back(-w);
    }
  }
  KrPrimal out;
  if (pos.empty() || neg.empty()) return out;
  DenseMatrix cost(pos.size(), neg.size());
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = 0; b < neg.size(); ++b) cost(a, b) = space.dist(pos[a], neg[b]);
  }
  TransportResult t = SolveTransport(supply, demand, cost);
  out.value = t.cost;
  for (const TransportEntry& e : t.plan) out.plan.push_back({pos[e.from], neg[e.to], e.mass});
  return out;
}

KrDual KrNormDual(const Molecule& m) {
  const FiniteMetricSpace& space = *m.space();
  const std::size_t n = space.size();
  const std::size_t base = space.base();
  // Variables: f(i) for non-base points, free.
  std::vector<std::size_t> var_of(n, n);
  std::vector<std::size_t> points;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == base) continue;
    var_of[i] = points.size();
    points.push_back(i);
  }
  std::vector<double> f(n, 0.0);
  if (points.empty()) return {0.0, PointFunction::Scalar(m.space(), f)};

  lp::LinearProgram prog(points.size());
  std::vector<double> c(points.size());
  for (std::size_t v = 0; v < points.size(); ++v) {
    prog.SetFree(v);
    c[v] = m.weights()[points[v]];
  }
  prog.SetObjective(c, /*maximize=*/true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || i == base) continue;
      // f(i) - f(j) <= d(i, j), with f(base) = 0.
      std::vector<double> row(points.size(), 0.0);
      row[var_of[i]] = 1.0;
      if (j != base) row[var_of[j]] = -1.0;
      prog.AddConstraint(std::move(row), lp::Sense::kLessEqual, space.dist(i, j));
      if (j == base) {
        std::vector<double> neg(points.size(), 0.0);
        neg[var_of[i]] = -1.0;
        prog.AddConstraint(std::move(neg), lp::Sense::kLessEqual, space.dist(i, j));
      }
    }
  }
  const lp::Result res = prog.Solve();
  if (res.status != lp::Status::kOptimal) {
    throw Error(ErrorCode::kInternal, "KR dual LP did not reach an optimum");
  }
  for (std::size_t v = 0; v < points.size(); ++v) f[points[v]] = res.x[v];
  return {res.objective, PointFunction::Scalar(m.space(), f)};
}

LipMap::LipMap(SpacePtr source, SpacePtr target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!source_ || !target_) throw Error(ErrorCode::kInvalidArgument, "null space");
  if (assignment_.size() != source_->size()) {
    throw Error(ErrorCode::kDimensionMismatch, "assignment needs one image per point");
  }
  for (std::size_t y : assignment_) {
    if (y >= target_->size()) throw Error(ErrorCode::kInvalidArgument, "image out of range");
  }
  if (assignment_[source_->base()] != target_->base()) {
    throw Error(ErrorCode::kInvalidArgument, "map must send base to base");
  }
}

double LipMap::LipschitzConstant() const {
  return ComputeCoarseConstants(*this).beta_star;
}

std::optional<PointPair> LipMap::Collision() const {
  const std::size_t n = assignment_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (assignment_[i] == assignment_[j]) return PointPair{i, j};
    }
  }
  return std::nullopt;
}

LipMap Compose(const LipMap& outer, const LipMap& inner) {
  if (!(*inner.target() == *outer.source())) {
    throw Error(ErrorCode::kDimensionMismatch, "maps are not composable");
  }
  std::vector<std::size_t> a(inner.assignment().size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = outer(inner(x));
  return LipMap(inner.source(), outer.target(), std::move(a));
}

LiftedOperator::LiftedOperator(SpacePtr source, SpacePtr target, std::vector<int> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != source_->size() * target_->size()) {
    throw Error(ErrorCode::kDimensionMismatch, "lifted matrix has the wrong shape");
  }
}

Molecule LiftedOperator::Apply(const Molecule& m) const {
  if (!(*m.space() == *source_)) {
    throw Error(ErrorCode::kDimensionMismatch, "molecule is not on the source space");
  }
  std::vector<double> w(rows(), 0.0);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if ((*this)(i, j) != 0) w[i] += (*this)(i, j) * m.weights()[j];
    }
  }
  return Molecule::FromCombination(target_, std::move(w));
}

LiftedOperator LiftedOperator::Then(const LiftedOperator& next) const {
  if (!(*target_ == *next.source_)) {
    throw Error(ErrorCode::kDimensionMismatch, "operators are not composable");
  }
  const std::size_t r = next.rows();
  const std::size_t k = rows();
  const std::size_t c = cols();
  std::vector<int> out(r * c, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      const int a = next(i, t);
      if (a == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i * c + j] += a * (*this)(t, j);
    }
  }
  return LiftedOperator(source_, next.target_, std::move(out));
}

LiftedOperator LiftMap(const LipMap& map) {
  const std::size_t rows = map.target()->size();
  const std::size_t cols = map.source()->size();
  std::vector<int> m(rows * cols, 0);
  for (std::size_t x = 0; x < cols; ++x) {
    const std::size_t y = map(x);
    if (x == map.source()->base() || y == map.target()->base()) continue;
    m[y * cols + x] = 1;
  }
  return LiftedOperator(map.source(), map.target(), std::move(m));
}

PairValue LiftedOperatorNorm(const LipMap& map) {
  const FiniteMetricSpace& src = *map.source();
  if (src.size() < 2) throw Error(ErrorCode::kSingletonSpace, "norm needs two points");
  const LiftedOperator lifted = LiftMap(map);
  PairValue best{-1.0, {0, 1}};
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = i + 1; j < src.size(); ++j) {
      const Molecule image = lifted.Apply(Molecule::DiracDifference(map.source(), i, j));
      const double ratio = KrNormPrimal(image).value / src.dist(i, j);
      if (ratio > best.value) best = {ratio, {i, j}};
    }
  }
  return best;
}

PointFunction AdjointCompose(const PointFunction& f, const LipMap& map) {
  if (!(*f.space() == *map.target())) {
    throw Error(ErrorCode::kDimensionMismatch, "f must live on the map's target");
  }
  const std::size_t n = map.source()->size();
  DenseMatrix v(n, f.target().m);
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = f.at(map(x));
    for (std::size_t c = 0; c < row.size(); ++c) v(x, c) = row[c];
  }
  return PointFunction(map.source(), f.target(), std::move(v));
}

CoarseConstants ComputeCoarseConstants(const LipMap& map) {
  const FiniteMetricSpace& src = *map.source();
  const FiniteMetricSpace& tgt = *map.target();
  if (src.size() < 2) throw Error(ErrorCode::kSingletonSpace, "needs two source points");
  CoarseConstants out;
  bool first = true;
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = i + 1; j < src.size(); ++j) {
      const std::size_t fi = map(i);
      const std::size_t fj = map(j);
      const double image = fi == fj ? 0.0 : tgt.dist(fi, fj);
      const double ratio = image / src.dist(i, j);
      if (first || ratio < out.alpha_star) {
        out.alpha_star = ratio;
        out.alpha_pair = {i, j};
      }
      if (first || ratio > out.beta_star) {
        out.beta_star = ratio;
        out.beta_pair = {i, j};
      }
      first = false;
    }
  }
  return out;
}

PointFunction AdjointPreimage(const PointFunction& g, const LipMap& map) {
  if (g.target().m != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "adjoint preimage is scalar-valued");
  }
  if (!(*g.space() == *map.source())) {
    throw Error(ErrorCode::kDimensionMismatch, "g must live on the map's source");
  }
  if (const auto collision = map.Collision()) {
    throw Error(ErrorCode::kNonInjectiveMap,
                "points " + std::to_string(collision->i) + " and " +
                    std::to_string(collision->j) + " share an image",
                {collision->i, collision->j});
  }
  const FiniteMetricSpace& tgt = *map.target();
  const std::size_t n = map.source()->size();
  std::vector<std::size_t> image(n);
  std::vector<double> values(n);
  double tight = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    image[x] = map(x);
    values[x] = g.values()(x, 0);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      tight = std::max(tight, std::fabs(values[x] - values[y]) / tgt.dist(image[x], image[y]));
    }
  }
  return McShaneExtend(map.target(), image, values, tight);
}

}  // namespace lipkit
