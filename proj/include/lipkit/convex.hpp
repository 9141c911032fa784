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

#ifndef LIPKIT_CONVEX_HPP_
#define LIPKIT_CONVEX_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lipkit/dense_matrix.hpp"
#include "lipkit/lip_space.hpp"
#include "lipkit/metric.hpp"
#include "lipkit/porosity.hpp"

namespace lipkit {

// Symmetric polyhedral gauge phi(x) = max_i |<v_i, x>| on R^dim. Its unit
// sublevel set C_phi is the polyhedron {x : |<v_i, x>| <= 1 for all i}.
class PolyhedralGauge {
 public:
  // rows is k x dim with k >= 1.
  PolyhedralGauge(std::size_t dim, DenseMatrix rows);

  std::size_t dim() const { return dim_; }
  const DenseMatrix& rows() const { return rows_; }
  std::size_t rank() const { return rank_; }
  // Rank below dim: phi vanishes on a nonzero subspace.
  bool degenerate() const { return rank_ < dim_; }

 private:
  std::size_t dim_;
  DenseMatrix rows_;
  std::size_t rank_;
};

struct DualVector {
  std::vector<double> coords;
};

struct Unbounded {
  bool operator==(const Unbounded&) const = default;
};

// Either a finite supremum or Unbounded.
using SupportValue = std::variant<double, Unbounded>;

inline bool IsUnbounded(const SupportValue& v) {
  return std::holds_alternative<Unbounded>(v);
}

double GaugeEval(const PolyhedralGauge& gauge, std::span<const double> x);

// sup over C_phi of <x*, x>, solved as an LP.
SupportValue ComputeSupportValue(const PolyhedralGauge& gauge, const DualVector& xstar);

// Finite support value: x* lies in the barrier cone B(C_phi).
bool BarrierMembership(const PolyhedralGauge& gauge, const DualVector& xstar);
// Support value at most 1 (up to 1e-12): x* lies in the polar of C_phi.
bool PolarMembership(const PolyhedralGauge& gauge, const DualVector& xstar);

// Algebraic route: rank of the rows does not grow when x* is appended.
bool RowSpanContains(const PolyhedralGauge& gauge, const DualVector& xstar);
// Null-space route: x* annihilates every direction on which phi vanishes,
// so the supremum over the level set {phi = 1} is finite.
bool LevelSetSupportFinite(const PolyhedralGauge& gauge, const DualVector& xstar);

struct Boundedness {
  bool bounded = true;
  // Euclidean unit vector in the null space of the rows when unbounded.
  std::optional<std::vector<double>> witness;
};

Boundedness BoundednessCheck(const PolyhedralGauge& gauge);

// min over ||x|| = 1 of max_k |<u_k, x>|; the sphere is L1 or Linf and is
// covered facet by facet with one LP each.
double MinOnUnitSphere(const DenseMatrix& functionals, NormKind sphere);

struct NormingResult {
  double c = 0.0;
  bool separating = false;
};

// c = min over the unit sphere of N_S(x) = max_{s in S} |s(x)| / ||s||_*,
// where ||.||_* is the dual norm. Zero vectors are ignored.
NormingResult NormingConstant(const std::vector<DualVector>& set, NormKind norm_on_x);

// Metric ||x_i - x_j|| on a point cloud given as rows.
FiniteMetricSpace NormMetricSpace(const DenseMatrix& points, NormKind norm,
                                  std::size_t base);

struct DualVertexWitness {
  PorosityWitness witness;
  DualVector functional;
};

// Linear witness for a polyhedral norm: a dual-ball vertex x* with ||x*||_* = 1
// and x*(x_a - x_b) = ||x_a - x_b||, so p(x) = x*(x - x_base) e has K = 1.
DualVertexWitness MakeDualVertexWitness(const DenseMatrix& points, const SpacePtr& space,
                                        NormKind norm, PointPair pair, TargetSpace target);

}  // namespace lipkit

#endif  // LIPKIT_CONVEX_HPP_
