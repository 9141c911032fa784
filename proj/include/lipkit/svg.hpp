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

#ifndef LIPKIT_SVG_HPP_
#define LIPKIT_SVG_HPP_

#include <string>
#include <utility>
#include <vector>

namespace lipkit::svg {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  bool filled = false;
};

std::string LinePlot(const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<Series>& series,
                     bool log_y = false);

// Filled markers for members, hollow ones for non-members.
std::string ScatterPlot(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<ScatterPoint>& points);

}  // namespace lipkit::svg

#endif  // LIPKIT_SVG_HPP_
