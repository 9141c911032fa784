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

#ifndef LIPKIT_FREE_SPACE_HPP_
#define LIPKIT_FREE_SPACE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "lipkit/lip_space.hpp"
#include "lipkit/metric.hpp"
#include "lipkit/transport.hpp"

namespace lipkit {

inline constexpr double kMoleculeTolerance = 1e-12;

// Zero-sum weights on the points: an element of the finite free space.
class Molecule {
 public:
  // Throws UnbalancedMolecule unless |sum| <= 1e-12.
  Molecule(SpacePtr space, std::vector<double> weights);

  // Sum of coeffs[i] delta_i over non-base points; the base weight is set to
  // restore zero sum, since delta_base is zero in the quotient.
  static Molecule FromCombination(SpacePtr space, std::vector<double> coeffs);
  // delta_x - delta_y.
  static Molecule DiracDifference(SpacePtr space, std::size_t x, std::size_t y);

  const SpacePtr& space() const { return space_; }
  const std::vector<double>& weights() const { return weights_; }

  Molecule operator+(const Molecule& other) const;

 private:
  SpacePtr space_;
  std::vector<double> weights_;
};

struct KrPrimal {
  double value = 0.0;
  // Entries route mass from positive-weight points to negative-weight ones,
  // indexed by point.
  std::vector<TransportEntry> plan;
};

struct KrDual {
  double value = 0.0;
  PointFunction optimizer;
};

// min sum t_ij d(i,j) over plans moving the positive part onto the negative
// part.
KrPrimal KrNormPrimal(const Molecule& m);
// max sum w_i f(i) over scalar f with f(base) = 0 and |f(i)-f(j)| <= d(i,j).
KrDual KrNormDual(const Molecule& m);

// Base-point preserving map between finite pointed spaces.
class LipMap {
 public:
  LipMap(SpacePtr source, SpacePtr target, std::vector<std::size_t> assignment);

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }

  // Lipschitz constant of the map, max d'(F x, F x') / d(x, x').
  double LipschitzConstant() const;
  // First collided source pair, if any.
  std::optional<PointPair> Collision() const;

 private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<std::size_t> assignment_;
};

LipMap Compose(const LipMap& outer, const LipMap& inner);

// Integer matrix of the lifted operator in quotient coordinates: column x has
// a one in row F(x) unless x or F(x) is a base point, whose Dirac is zero.
class LiftedOperator {
 public:
  LiftedOperator(SpacePtr source, SpacePtr target, std::vector<int> matrix);

  std::size_t rows() const { return target_->size(); }
  std::size_t cols() const { return source_->size(); }
  int operator()(std::size_t i, std::size_t j) const { return matrix_[i * cols() + j]; }
  const std::vector<int>& matrix() const { return matrix_; }

  Molecule Apply(const Molecule& m) const;
  LiftedOperator Then(const LiftedOperator& next) const;

  bool operator==(const LiftedOperator& other) const { return matrix_ == other.matrix_; }

 private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<int> matrix_;
};

LiftedOperator LiftMap(const LipMap& map);

// max over pairs of kr(F^(delta_x - delta_y)) / d(x, y).
PairValue LiftedOperatorNorm(const LipMap& map);

// f o F for f on the target space.
PointFunction AdjointCompose(const PointFunction& f, const LipMap& map);

struct CoarseConstants {
  double alpha_star = 0.0;
  double beta_star = 0.0;
  PointPair alpha_pair;
  PointPair beta_pair;
  bool IsCoarseLipschitz() const { return alpha_star > 0.0; }
};

CoarseConstants ComputeCoarseConstants(const LipMap& map);

// Scalar f on the target with f o F = g, built on F(source) and extended by
// inf-convolution with the tight constant measured on the image.
PointFunction AdjointPreimage(const PointFunction& g, const LipMap& map);

}  // namespace lipkit

#endif  // LIPKIT_FREE_SPACE_HPP_
