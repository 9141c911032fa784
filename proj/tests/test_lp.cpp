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

#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "lipkit/lp.hpp"
#include "lipkit/transport.hpp"
#include "oracles.hpp"

using namespace lipkit;
using lp::LinearProgram;
using lp::Sense;
using lp::Status;

namespace {

// max c.x over {A x <= b} in the plane by enumerating pairwise line
// intersections; returns +inf when no vertex exists or the LP is unbounded
// along a tested ray (the tests only use bounded instances).
double PlaneVertexMax(const std::vector<std::array<double, 3>>& rows, double c0, double c1) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      const double det = rows[a][0] * rows[b][1] - rows[a][1] * rows[b][0];
      if (std::fabs(det) < 1e-12) continue;
      const double x = (rows[a][2] * rows[b][1] - rows[a][1] * rows[b][2]) / det;
      const double y = (rows[a][0] * rows[b][2] - rows[a][2] * rows[b][0]) / det;
      bool feasible = true;
      for (const auto& r : rows) feasible = feasible && r[0] * x + r[1] * y <= r[2] + 1e-9;
      if (feasible) best = std::max(best, c0 * x + c1 * y);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("small textbook LP") {
  LinearProgram prog(2);
  prog.SetObjective({3, 5}, true);
  prog.AddConstraint({1, 0}, Sense::kLessEqual, 4);
  prog.AddConstraint({0, 2}, Sense::kLessEqual, 12);
  prog.AddConstraint({3, 2}, Sense::kLessEqual, 18);
  const lp::Result r = prog.Solve();
  REQUIRE(r.status == Status::kOptimal);
  CHECK(r.objective == doctest::Approx(36.0));
  CHECK(r.x[0] == doctest::Approx(2.0));
  CHECK(r.x[1] == doctest::Approx(6.0));
}

TEST_CASE("minimization with >= and = rows") {
  LinearProgram prog(3);
  prog.SetObjective({2, 3, 1}, false);
  prog.AddConstraint({1, 1, 1}, Sense::kEqual, 10);
  prog.AddConstraint({1, 0, 0}, Sense::kGreaterEqual, 2);
  prog.AddConstraint({0, 1, -1}, Sense::kGreaterEqual, 1);
  const lp::Result r = prog.Solve();
  REQUIRE(r.status == Status::kOptimal);
  // x1 = 2 forced low; x2 - x3 >= 1 with x2 + x3 = 8 gives x2 = 4.5, x3 = 3.5.
  CHECK(r.objective == doctest::Approx(4.0 + 13.5 + 3.5));
}

TEST_CASE("free variables and negative right-hand sides") {
  LinearProgram prog(1);
  prog.SetFree(0);
  prog.SetObjective({1}, false);
  prog.AddConstraint({-1}, Sense::kLessEqual, 3);  // x >= -3
  const lp::Result r = prog.Solve();
  REQUIRE(r.status == Status::kOptimal);
  CHECK(r.objective == doctest::Approx(-3.0));
  CHECK(r.x[0] == doctest::Approx(-3.0));
}

TEST_CASE("infeasible and unbounded programs") {
  LinearProgram infeasible(1);
  infeasible.SetObjective({1}, true);
  infeasible.AddConstraint({1}, Sense::kLessEqual, 1);
  infeasible.AddConstraint({1}, Sense::kGreaterEqual, 2);
  CHECK(infeasible.Solve().status == Status::kInfeasible);

  LinearProgram unbounded(2);
  unbounded.SetObjective({1, 1}, true);
  unbounded.AddConstraint({1, -1}, Sense::kLessEqual, 1);
  CHECK(unbounded.Solve().status == Status::kUnbounded);
}

TEST_CASE("Bland's rule terminates on a cycling example") {
  LinearProgram prog(4);
  prog.SetObjective({0.75, -20, 0.5, -6}, true);
  prog.AddConstraint({0.25, -8, -1, 9}, Sense::kLessEqual, 0);
  prog.AddConstraint({0.5, -12, -0.5, 3}, Sense::kLessEqual, 0);
  prog.AddConstraint({0, 0, 1, 0}, Sense::kLessEqual, 1);
  const lp::Result r = prog.Solve();
  REQUIRE(r.status == Status::kOptimal);
  CHECK(r.objective == doctest::Approx(1.25));
}

TEST_CASE("random bounded planar LPs agree with vertex enumeration") {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::array<double, 3>> rows{{1, 0, 5}, {-1, 0, 5}, {0, 1, 5}, {0, -1, 5}};
    for (int k = 0; k < 4; ++k) {
      rows.push_back({oracle::Uniform(gen, -1, 1), oracle::Uniform(gen, -1, 1),
                      oracle::Uniform(gen, 0.1, 2)});
    }
    const double c0 = oracle::Uniform(gen, -1, 1), c1 = oracle::Uniform(gen, -1, 1);
    LinearProgram prog(2);
    prog.SetFree(0);
    prog.SetFree(1);
    prog.SetObjective({c0, c1}, true);
    for (const auto& r : rows) prog.AddConstraint({r[0], r[1]}, Sense::kLessEqual, r[2]);
    const lp::Result r = prog.Solve();
    REQUIRE(r.status == Status::kOptimal);
    CHECK(r.objective == doctest::Approx(PlaneVertexMax(rows, c0, c1)).epsilon(1e-9));
  }
}

TEST_CASE("transport matches the vertex oracle") {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = 1 + gen() % 3, q = 1 + gen() % 3;
    std::vector<double> supply(p), demand(q);
    double total = 0.0;
    for (double& s : supply) total += (s = oracle::Uniform(gen, 0.1, 1));
    double left = total;
    for (std::size_t j = 0; j + 1 < q; ++j) left -= (demand[j] = total / static_cast<double>(q));
    demand[q - 1] = left;
    oracle::Matrix cost(p, std::vector<double>(q));
    DenseMatrix c(p, q);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) c(i, j) = cost[i][j] = oracle::Uniform(gen, 0, 2);
    }
    const TransportResult r = SolveTransport(supply, demand, c);
    CHECK(r.cost == doctest::Approx(oracle::TransportVertexMin(supply, demand, cost)).epsilon(1e-9));
    std::vector<double> shipped(p, 0.0), received(q, 0.0);
    double plan_cost = 0.0;
    for (const TransportEntry& e : r.plan) {
      CHECK(e.mass > 0.0);
      shipped[e.from] += e.mass;
      received[e.to] += e.mass;
      plan_cost += e.mass * cost[e.from][e.to];
    }
    for (std::size_t i = 0; i < p; ++i) CHECK(shipped[i] == doctest::Approx(supply[i]));
    for (std::size_t j = 0; j < q; ++j) CHECK(received[j] == doctest::Approx(demand[j]));
    CHECK(plan_cost == doctest::Approx(r.cost));
  }
}

TEST_CASE("empty transport") {
  const TransportResult r = SolveTransport({}, {}, DenseMatrix(0, 0));
  CHECK(r.cost == 0.0);
  CHECK(r.plan.empty());
}
