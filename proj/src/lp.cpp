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

#include "lipkit/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipkit/error.hpp"

namespace lipkit::lp {
namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kFeasibilityEps = 1e-9;
constexpr std::size_t kMaxIterations = 200000;

// Tableau over columns [structural | slack | artificial | rhs].
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), a_(rows * (cols + 1), 0.0), z_(cols + 1, 0.0), basis_(rows) {}

  double& at(std::size_t i, std::size_t j) { return a_[i * (n_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * (n_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, n_); }
  double rhs(std::size_t i) const { return at(i, n_); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Reduced costs z_j = c_B B^-1 A_j - c_j for the maximization of c.x.
  void PriceOut(const std::vector<double>& c) {
    for (std::size_t j = 0; j <= n_; ++j) z_[j] = j < n_ ? -c[j] : 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= n_; ++j) z_[j] += cb * at(i, j);
    }
  }

  double objective() const { return z_[n_]; }

  void Pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t j = 0; j <= n_; ++j) at(row, j) /= p;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    const double f = z_[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j <= n_; ++j) z_[j] -= f * at(row, j);
      z_[col] = 0.0;
    }
    basis_[row] = col;
  }

  // Runs Bland-rule iterations over columns allowed[j]. Returns false when
  // the objective is unbounded.
  bool Optimize(const std::vector<bool>& allowed, const std::vector<bool>& active_row) {
    for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (allowed[j] && z_[j] < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return true;
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_row[i]) continue;
        const double aij = at(i, enter);
        if (aij <= kPivotEps) continue;
        const double ratio = rhs(i) / aij;
        if (ratio < best - 1e-15 ||
            (std::fabs(ratio - best) <= 1e-15 && leave < m_ && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_) return false;
      Pivot(leave, enter);
    }
    throw Error(ErrorCode::kInternal, "simplex iteration limit reached");
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<double> a_;
  std::vector<double> z_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), free_(num_vars, false), objective_(num_vars, 0.0) {}

void LinearProgram::SetFree(std::size_t var) {
  if (var >= num_vars_) throw Error(ErrorCode::kInvalidArgument, "variable out of range");
  free_[var] = true;
}

void LinearProgram::SetObjective(std::vector<double> coeffs, bool maximize) {
  if (coeffs.size() != num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "objective length mismatch");
  }
  objective_ = std::move(coeffs);
  maximize_ = maximize;
}

void LinearProgram::AddConstraint(std::vector<double> coeffs, Sense sense, double rhs) {
  if (coeffs.size() != num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "constraint length mismatch");
  }
  rows_.push_back({std::move(coeffs), sense, rhs});
}

Result LinearProgram::Solve() const {
  // Column layout: each variable gets a positive part; free ones also get a
  // negative part. Then one slack per inequality and one artificial per row
  // that lacks an identity column.
  std::vector<std::size_t> pos_col(num_vars_), neg_col(num_vars_, 0);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < num_vars_; ++v) {
    pos_col[v] = cols++;
    if (free_[v]) neg_col[v] = cols++;
  }
  const std::size_t m = rows_.size();

  // Normalize to rhs >= 0.
  std::vector<Sense> sense(m);
  std::vector<double> sign(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    sense[i] = rows_[i].sense;
    if (rows_[i].rhs < 0.0) {
      sign[i] = -1.0;
      if (sense[i] == Sense::kLessEqual) sense[i] = Sense::kGreaterEqual;
      else if (sense[i] == Sense::kGreaterEqual) sense[i] = Sense::kLessEqual;
    }
  }
  std::vector<std::size_t> slack_col(m, 0), art_col(m, 0);
  std::vector<bool> has_art(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] != Sense::kEqual) slack_col[i] = cols++;
  }
  const std::size_t first_art = cols;
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] != Sense::kLessEqual) {
      art_col[i] = cols++;
      has_art[i] = true;
    }
  }

  Tableau t(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t v = 0; v < num_vars_; ++v) {
      const double a = sign[i] * rows_[i].coeffs[v];
      t.at(i, pos_col[v]) = a;
      if (free_[v]) t.at(i, neg_col[v]) = -a;
    }
    t.rhs(i) = sign[i] * rows_[i].rhs;
    if (sense[i] == Sense::kLessEqual) {
      t.at(i, slack_col[i]) = 1.0;
      t.basis()[i] = slack_col[i];
    } else {
      if (sense[i] == Sense::kGreaterEqual) t.at(i, slack_col[i]) = -1.0;
      t.at(i, art_col[i]) = 1.0;
      t.basis()[i] = art_col[i];
    }
  }

  std::vector<bool> active_row(m, true);
  Result result;
  if (first_art < cols) {
    std::vector<double> c1(cols, 0.0);
    for (std::size_t j = first_art; j < cols; ++j) c1[j] = -1.0;
    t.PriceOut(c1);
    std::vector<bool> all(cols, true);
    t.Optimize(all, active_row);
    double scale = 1.0;
    for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::fabs(t.rhs(i)));
    if (t.objective() < -kFeasibilityEps * scale) {
      result.status = Status::kInfeasible;
      return result;
    }
    // Drive remaining artificials out of the basis; rows where that is
    // impossible are redundant.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < first_art) continue;
      std::size_t col = first_art;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (std::fabs(t.at(i, j)) > kPivotEps) {
          col = j;
          break;
        }
      }
      if (col < first_art) {
        t.Pivot(i, col);
      } else {
        active_row[i] = false;
      }
    }
  }

  std::vector<double> c2(cols, 0.0);
  const double dir = maximize_ ? 1.0 : -1.0;
  for (std::size_t v = 0; v < num_vars_; ++v) {
    c2[pos_col[v]] = dir * objective_[v];
    if (free_[v]) c2[neg_col[v]] = -dir * objective_[v];
  }
  t.PriceOut(c2);
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = first_art; j < cols; ++j) allowed[j] = false;
  if (!t.Optimize(allowed, active_row)) {
    result.status = Status::kUnbounded;
    return result;
  }

  std::vector<double> col_value(cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (active_row[i]) col_value[t.basis()[i]] = t.rhs(i);
  }
  result.status = Status::kOptimal;
  result.x.assign(num_vars_, 0.0);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    result.x[v] = col_value[pos_col[v]] - (free_[v] ? col_value[neg_col[v]] : 0.0);
  }
  double value = 0.0;
  for (std::size_t v = 0; v < num_vars_; ++v) value += objective_[v] * result.x[v];
  result.objective = value;
  return result;
}

}  // namespace lipkit::lp
