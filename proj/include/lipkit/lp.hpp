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

#ifndef LIPKIT_LP_HPP_
#define LIPKIT_LP_HPP_

#include <cstddef>
#include <vector>

namespace lipkit::lp {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };
enum class Status { kOptimal, kUnbounded, kInfeasible };

struct Result {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// Small dense linear program solved by a two-phase tableau simplex with
// Bland's rule. Variables are nonnegative unless marked free.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  void SetFree(std::size_t var);
  void SetObjective(std::vector<double> coeffs, bool maximize);
  void AddConstraint(std::vector<double> coeffs, Sense sense, double rhs);

  std::size_t num_vars() const { return num_vars_; }
  Result Solve() const;

 private:
  struct Row {
    std::vector<double> coeffs;
    Sense sense;
    double rhs;
  };

  std::size_t num_vars_;
  std::vector<bool> free_;
  std::vector<double> objective_;
  bool maximize_ = true;
  std::vector<Row> rows_;
};

}  // namespace lipkit::lp

#endif  // LIPKIT_LP_HPP_
