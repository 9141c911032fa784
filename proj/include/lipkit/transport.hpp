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

#ifndef LIPKIT_TRANSPORT_HPP_
#define LIPKIT_TRANSPORT_HPP_

#include <cstddef>
#include <vector>

#include "lipkit/dense_matrix.hpp"

namespace lipkit {

struct TransportEntry {
  std::size_t from = 0;
  std::size_t to = 0;
  double mass = 0.0;
  bool operator==(const TransportEntry&) const = default;
};

struct TransportResult {
  double cost = 0.0;
  std::vector<TransportEntry> plan;
};

// Minimum-cost transport of supply[i] >= 0 out of each node into demand[j] >= 0
// with unit cost cost(i, j). Totals must agree up to rounding; the smaller
// total is shipped. Successive shortest paths on the bipartite network.
TransportResult SolveTransport(const std::vector<double>& supply,
                               const std::vector<double>& demand, const DenseMatrix& cost);

}  // namespace lipkit

#endif  // LIPKIT_TRANSPORT_HPP_
