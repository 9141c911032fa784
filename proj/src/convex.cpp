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

#include "lipkit/convex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipkit/error.hpp"
#include "lipkit/lp.hpp"

namespace lipkit {
namespace {

constexpr double kRankTolerance = 1e-9;
constexpr double kPolarTolerance = 1e-12;

Eigen::MatrixXd ToEigen(const DenseMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

std::size_t NumericalRank(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankTolerance * scale) ++rank;
  }
  return rank;
}

// Orthonormal basis (columns) of the null space of m.
Eigen::MatrixXd NullSpace(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankTolerance * scale) ++rank;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

void CheckDim(const PolyhedralGauge& gauge, std::size_t size) {
  if (size != gauge.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector dimension does not match gauge");
  }
}

double DualNorm(std::span<const double> v, NormKind norm_on_x) {
  switch (norm_on_x) {
    case NormKind::kL1: return Norm(v, NormKind::kLinf);
    case NormKind::kLinf: return Norm(v, NormKind::kL1);
    case NormKind::kL2: return Norm(v, NormKind::kL2);
  }
  return 0.0;
}

// min t over x on one facet, subject to -t <= <u_k, x> <= t. Variables are
// laid out as [x or y (dim) | t].
double FacetMinimum(const DenseMatrix& u, NormKind sphere, std::size_t facet,
                    const std::vector<double>& signs) {
  const std::size_t dim = u.cols();
  lp::LinearProgram prog(dim + 1);
  std::vector<double> obj(dim + 1, 0.0);
  obj[dim] = 1.0;
  prog.SetObjective(obj, /*maximize=*/false);
  for (std::size_t k = 0; k < u.rows(); ++k) {
    std::vector<double> up(dim + 1, 0.0), down(dim + 1, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      const double coeff = sphere == NormKind::kL1 ? u(k, i) * signs[i] : u(k, i);
      up[i] = coeff;
      down[i] = -coeff;
    }
    up[dim] = -1.0;
    down[dim] = -1.0;
    prog.AddConstraint(std::move(up), lp::Sense::kLessEqual, 0.0);
    prog.AddConstraint(std::move(down), lp::Sense::kLessEqual, 0.0);
  }
  if (sphere == NormKind::kLinf) {
    // Facet x_facet = 1, |x_j| <= 1 elsewhere; x is free.
    for (std::size_t i = 0; i < dim; ++i) {
      prog.SetFree(i);
      std::vector<double> row(dim + 1, 0.0);
      row[i] = 1.0;
      if (i == facet) {
        prog.AddConstraint(row, lp::Sense::kEqual, 1.0);
      } else {
        prog.AddConstraint(row, lp::Sense::kLessEqual, 1.0);
        row[i] = -1.0;
        prog.AddConstraint(row, lp::Sense::kLessEqual, 1.0);
      }
    }
  } else {
    // Facet {x = signs * y : y >= 0, sum y = 1}.
    std::vector<double> row(dim + 1, 1.0);
    row[dim] = 0.0;
    prog.AddConstraint(std::move(row), lp::Sense::kEqual, 1.0);
  }
  const lp::Result res = prog.Solve();
  if (res.status != lp::Status::kOptimal) {
    throw Error(ErrorCode::kInternal, "facet LP did not reach an optimum");
  }
  return std::max(0.0, res.objective);
}

}  // namespace

PolyhedralGauge::PolyhedralGauge(std::size_t dim, DenseMatrix rows)
    : dim_(dim), rows_(std::move(rows)), rank_(0) {
  if (dim_ == 0) throw Error(ErrorCode::kInvalidArgument, "gauge dimension must be >= 1");
  if (rows_.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "gauge needs >= 1 row");
  if (rows_.cols() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "gauge rows must have dim entries");
  }
  for (double v : rows_.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite gauge row");
  }
  rank_ = NumericalRank(ToEigen(rows_));
}

double GaugeEval(const PolyhedralGauge& gauge, std::span<const double> x) {
  CheckDim(gauge, x.size());
  double best = 0.0;
  for (std::size_t k = 0; k < gauge.rows().rows(); ++k) {
    double dot = 0.0;
    const auto row = gauge.rows().row(k);
    for (std::size_t i = 0; i < x.size(); ++i) dot += row[i] * x[i];
    best = std::max(best, std::fabs(dot));
  }
  return best;
}

SupportValue ComputeSupportValue(const PolyhedralGauge& gauge, const DualVector& xstar) {
  CheckDim(gauge, xstar.coords.size());
  const std::size_t dim = gauge.dim();
  lp::LinearProgram prog(dim);
  for (std::size_t i = 0; i < dim; ++i) prog.SetFree(i);
  prog.SetObjective(xstar.coords, /*maximize=*/true);
  for (std::size_t k = 0; k < gauge.rows().rows(); ++k) {
    const auto row = gauge.rows().row(k);
    std::vector<double> up(row.begin(), row.end());
    std::vector<double> down(dim);
    for (std::size_t i = 0; i < dim; ++i) down[i] = -row[i];
    prog.AddConstraint(std::move(up), lp::Sense::kLessEqual, 1.0);
    prog.AddConstraint(std::move(down), lp::Sense::kLessEqual, 1.0);
  }
  const lp::Result res = prog.Solve();
  switch (res.status) {
    case lp::Status::kUnbounded: return Unbounded{};
    case lp::Status::kOptimal: return res.objective;
    case lp::Status::kInfeasible: break;
  }
  throw Error(ErrorCode::kInternal, "support LP reported infeasible; origin is feasible");
}

bool BarrierMembership(const PolyhedralGauge& gauge, const DualVector& xstar) {
  return !IsUnbounded(ComputeSupportValue(gauge, xstar));
}

bool PolarMembership(const PolyhedralGauge& gauge, const DualVector& xstar) {
  const SupportValue v = ComputeSupportValue(gauge, xstar);
  return !IsUnbounded(v) && std::get<double>(v) <= 1.0 + kPolarTolerance;
}

bool RowSpanContains(const PolyhedralGauge& gauge, const DualVector& xstar) {
  CheckDim(gauge, xstar.coords.size());
  const Eigen::MatrixXd rows = ToEigen(gauge.rows());
  Eigen::MatrixXd stacked(rows.rows() + 1, rows.cols());
  stacked.topRows(rows.rows()) = rows;
  for (std::size_t i = 0; i < gauge.dim(); ++i) stacked(rows.rows(), i) = xstar.coords[i];
  return NumericalRank(stacked) == gauge.rank();
}

bool LevelSetSupportFinite(const PolyhedralGauge& gauge, const DualVector& xstar) {
  CheckDim(gauge, xstar.coords.size());
  const Eigen::MatrixXd null = NullSpace(ToEigen(gauge.rows()));
  if (null.cols() == 0) return true;
  const Eigen::Map<const Eigen::VectorXd> v(xstar.coords.data(), xstar.coords.size());
  const double scale = std::max(1.0, v.norm());
  return (null.transpose() * v).norm() <= kRankTolerance * scale;
}

Boundedness BoundednessCheck(const PolyhedralGauge& gauge) {
  Boundedness out;
  if (!gauge.degenerate()) return out;
  const Eigen::MatrixXd null = NullSpace(ToEigen(gauge.rows()));
  Eigen::VectorXd w = null.col(0);
  w.normalize();
  // Deterministic orientation: first nonzero coordinate positive.
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (std::fabs(w(i)) > kRankTolerance) {
      if (w(i) < 0.0) w = -w;
      break;
    }
  }
  out.bounded = false;
  out.witness = std::vector<double>(w.data(), w.data() + w.size());
  return out;
}

double MinOnUnitSphere(const DenseMatrix& functionals, NormKind sphere) {
  if (sphere == NormKind::kL2) {
    throw Error(ErrorCode::kInvalidArgument, "only polyhedral (L1, Linf) spheres");
  }
  const std::size_t dim = functionals.cols();
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  if (functionals.rows() == 0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  if (sphere == NormKind::kLinf) {
    // The objective is even, so the facets x_i = -1 mirror x_i = +1.
    for (std::size_t i = 0; i < dim; ++i) {
      best = std::min(best, FacetMinimum(functionals, sphere, i, {}));
    }
  } else {
    const std::size_t patterns = std::size_t{1} << (dim - 1);
    std::vector<double> signs(dim, 1.0);
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      for (std::size_t i = 1; i < dim; ++i) signs[i] = (mask >> (i - 1)) & 1 ? -1.0 : 1.0;
      best = std::min(best, FacetMinimum(functionals, sphere, 0, signs));
    }
  }
  return best;
}

NormingResult NormingConstant(const std::vector<DualVector>& set, NormKind norm_on_x) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "norming set must be nonempty");
  if (norm_on_x == NormKind::kL2) {
    throw Error(ErrorCode::kInvalidArgument, "norm on X must be L1 or Linf");
  }
  const std::size_t dim = set.front().coords.size();
  std::vector<std::vector<double>> kept;
  for (const DualVector& s : set) {
    if (s.coords.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "functionals differ in dimension");
    }
    const double dual = DualNorm(s.coords, norm_on_x);
    if (dual == 0.0) continue;
    std::vector<double> u = s.coords;
    for (double& x : u) x /= dual;
    kept.push_back(std::move(u));
  }
  NormingResult out;
  if (kept.empty()) return out;
  const DenseMatrix u = DenseMatrix::FromRows(kept);
  out.separating = NumericalRank(ToEigen(u)) == dim;
  out.c = out.separating ? MinOnUnitSphere(u, norm_on_x) : 0.0;
  return out;
}

FiniteMetricSpace NormMetricSpace(const DenseMatrix& points, NormKind norm,
                                  std::size_t base) {
  const std::size_t n = points.rows();
  DenseMatrix d(n, n);
  std::vector<double> diff(points.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t c = 0; c < points.cols(); ++c) diff[c] = points(i, c) - points(j, c);
      d(i, j) = d(j, i) = Norm(diff, norm);
    }
  }
  return FiniteMetricSpace::Validate(d, base);
}

DualVertexWitness MakeDualVertexWitness(const DenseMatrix& points, const SpacePtr& space,
                                        NormKind norm, PointPair pair, TargetSpace target) {
  const std::size_t n = points.rows();
  const std::size_t dim = points.cols();
  if (space->size() != n) throw Error(ErrorCode::kDimensionMismatch, "points vs space");
  if (pair.i >= n || pair.j >= n) throw Error(ErrorCode::kInvalidArgument, "pair range");
  if (pair.i == pair.j) {
    throw Error(ErrorCode::kDegeneratePair, "witness pair needs a != b", {pair.i, pair.j});
  }
  std::vector<double> w(dim);
  for (std::size_t c = 0; c < dim; ++c) w[c] = points(pair.i, c) - points(pair.j, c);
  std::vector<double> xstar(dim, 0.0);
  if (norm == NormKind::kLinf) {
    std::size_t arg = 0;
    for (std::size_t c = 1; c < dim; ++c) {
      if (std::fabs(w[c]) > std::fabs(w[arg])) arg = c;
    }
    xstar[arg] = w[arg] < 0.0 ? -1.0 : 1.0;
  } else if (norm == NormKind::kL1) {
    for (std::size_t c = 0; c < dim; ++c) xstar[c] = w[c] < 0.0 ? -1.0 : 1.0;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "dual-vertex witnesses need L1 or Linf");
  }
  const std::size_t base = space->base();
  DenseMatrix v(n, target.m);
  for (std::size_t x = 0; x < n; ++x) {
    double value = 0.0;
    for (std::size_t c = 0; c < dim; ++c) value += xstar[c] * (points(x, c) - points(base, c));
    v(x, 0) = x == base ? 0.0 : value;
  }
  PorosityWitness witness{PointFunction(space, target, std::move(v)), 1.0, pair};
  return {std::move(witness), DualVector{std::move(xstar)}};
}

}  // namespace lipkit
