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

// Independent reference computations used by the tests. Nothing here calls
// the solvers under test.

#ifndef LIPKIT_TESTS_ORACLES_HPP_
#define LIPKIT_TESTS_ORACLES_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline double Uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

// Random symmetric weights in [lo, hi], made metric by all-pairs shortest paths.
inline Matrix RepairedMetric(std::size_t n, std::mt19937_64& gen, double lo = 0.1,
                             double hi = 1.0) {
  Matrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = Uniform(gen, lo, hi);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Max over i<j of gap(i,j)/den(i,j).
template <typename Gap, typename Den>
double PairScan(std::size_t n, Gap gap, Den den) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, gap(i, j) / den(i, j));
  }
  return best;
}

// Minimum transport cost by enumerating every basic solution of the
// transportation polytope: each subset of cells whose equality system has a
// unique nonnegative solution is a vertex.
inline double TransportVertexMin(const std::vector<double>& supply,
                                 const std::vector<double>& demand, const Matrix& cost) {
  const std::size_t p = supply.size(), q = demand.size();
  if (p == 0 || q == 0) return 0.0;
  const std::size_t cells = p * q;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
    std::vector<std::size_t> used;
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask & (1u << c)) used.push_back(c);
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p + q),
                                              static_cast<Eigen::Index>(used.size()));
    Eigen::VectorXd b(static_cast<Eigen::Index>(p + q));
    for (std::size_t i = 0; i < p; ++i) b(static_cast<Eigen::Index>(i)) = supply[i];
    for (std::size_t j = 0; j < q; ++j) b(static_cast<Eigen::Index>(p + j)) = demand[j];
    for (std::size_t k = 0; k < used.size(); ++k) {
      const auto col = static_cast<Eigen::Index>(k);
      a(static_cast<Eigen::Index>(used[k] / q), col) = 1.0;
      a(static_cast<Eigen::Index>(p + used[k] % q), col) = 1.0;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() != static_cast<Eigen::Index>(used.size())) continue;
    const Eigen::VectorXd x = qr.solve(b);
    if ((a * x - b).cwiseAbs().maxCoeff() > 1e-10) continue;
    if (x.minCoeff() < -1e-12) continue;
    double total = 0.0;
    for (std::size_t k = 0; k < used.size(); ++k) {
      total += x(static_cast<Eigen::Index>(k)) * cost[used[k] / q][used[k] % q];
    }
    best = std::min(best, total);
  }
  return best;
}

// KR norm of a balanced weight vector via the vertex oracle.
inline double KrVertex(const Matrix& d, const std::vector<double>& w) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0) pos.push_back(i);
    if (w[i] < 0) neg.push_back(i);
  }
  std::vector<double> supply, demand;
  Matrix cost(pos.size(), std::vector<double>(neg.size()));
  for (std::size_t a : pos) supply.push_back(w[a]);
  for (std::size_t b : neg) demand.push_back(-w[b]);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = 0; j < neg.size(); ++j) cost[i][j] = d[pos[i]][neg[j]];
  }
  return TransportVertexMin(supply, demand, cost);
}

// Random zero-sum weights supported on the whole space.
inline std::vector<double> RandomMolecule(std::size_t n, std::mt19937_64& gen) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    w[i] = Uniform(gen, -1.0, 1.0);
    sum += w[i];
  }
  w[0] = -sum;
  return w;
}

}  // namespace oracle

#endif  // LIPKIT_TESTS_ORACLES_HPP_
