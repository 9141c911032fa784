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

#include "lipkit/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipkit/error.hpp"

namespace lipkit {
namespace {

struct Arc {
  std::size_t to;
  double cap;
  double cost;
  std::size_t rev;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  std::size_t AddArc(std::size_t from, std::size_t to, double cap, double cost) {
    adj_[from].push_back({to, cap, cost, adj_[to].size()});
    adj_[to].push_back({from, 0.0, -cost, adj_[from].size() - 1});
    return adj_[from].size() - 1;
  }

  const Arc& arc(std::size_t node, std::size_t k) const { return adj_[node][k]; }

  // Ships up to amount from s to t along shortest residual paths. Costs are
  // nonnegative on forward arcs, so no negative cycles arise; the improvement
  // threshold keeps Bellman-Ford from chasing rounding noise.
  double MinCostFlow(std::size_t s, std::size_t t, double amount, double eps) {
    const std::size_t n = adj_.size();
    double shipped = 0.0;
    double total_cost = 0.0;
    std::vector<double> dist(n);
    std::vector<std::size_t> prev_node(n), prev_arc(n);
    std::vector<char> in_queue(n);
    while (amount - shipped > eps) {
      std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
      std::fill(in_queue.begin(), in_queue.end(), 0);
      dist[s] = 0.0;
      std::vector<std::size_t> queue{s};
      in_queue[s] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        if (queue.size() > n * n * n + 16) {
          throw Error(ErrorCode::kInternal, "shortest path search did not settle");
        }
        const std::size_t u = queue[head];
        in_queue[u] = 0;
        for (std::size_t k = 0; k < adj_[u].size(); ++k) {
          const Arc& a = adj_[u][k];
          if (a.cap <= eps) continue;
          const double cand = dist[u] + a.cost;
          if (cand < dist[a.to] - 1e-13) {
            dist[a.to] = cand;
            prev_node[a.to] = u;
            prev_arc[a.to] = k;
            if (!in_queue[a.to]) {
              in_queue[a.to] = 1;
              queue.push_back(a.to);
            }
          }
        }
      }
      if (!std::isfinite(dist[t])) break;
      double push = amount - shipped;
      for (std::size_t v = t; v != s; v = prev_node[v]) {
        push = std::min(push, adj_[prev_node[v]][prev_arc[v]].cap);
      }
      for (std::size_t v = t; v != s; v = prev_node[v]) {
        Arc& a = adj_[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        adj_[v][a.rev].cap += push;
      }
      shipped += push;
      total_cost += push * dist[t];
    }
    return total_cost;
  }

 private:
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

TransportResult SolveTransport(const std::vector<double>& supply,
                               const std::vector<double>& demand, const DenseMatrix& cost) {
  if (cost.rows() != supply.size() || cost.cols() != demand.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cost matrix must be |supply| x |demand|");
  }
  double total_supply = 0.0;
  double total_demand = 0.0;
  for (double x : supply) {
    if (x < 0.0) throw Error(ErrorCode::kInvalidArgument, "negative supply");
    total_supply += x;
  }
  for (double x : demand) {
    if (x < 0.0) throw Error(ErrorCode::kInvalidArgument, "negative demand");
    total_demand += x;
  }
  for (double c : cost.data()) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw Error(ErrorCode::kInvalidArgument, "transport costs must be finite, >= 0");
    }
  }
  const std::size_t p = supply.size();
  const std::size_t q = demand.size();
  const std::size_t source = p + q;
  const std::size_t sink = p + q + 1;
  const double amount = std::min(total_supply, total_demand);
  const double eps = 1e-15 * std::max(1.0, amount);

  FlowNetwork net(p + q + 2);
  for (std::size_t i = 0; i < p; ++i) net.AddArc(source, i, supply[i], 0.0);
  for (std::size_t j = 0; j < q; ++j) net.AddArc(p + j, sink, demand[j], 0.0);
  std::vector<std::vector<std::size_t>> arc_id(p, std::vector<std::size_t>(q));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      arc_id[i][j] = net.AddArc(i, p + j, total_supply + total_demand, cost(i, j));
    }
  }

  net.MinCostFlow(source, sink, amount, eps);

  TransportResult result;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const Arc& fwd = net.arc(i, arc_id[i][j]);
      const double mass = net.arc(p + j, fwd.rev).cap;
      if (mass > 0.0) {
        result.plan.push_back({i, j, mass});
        result.cost += mass * cost(i, j);
      }
    }
  }
  return result;
}

}  // namespace lipkit
