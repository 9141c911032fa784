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

#include "lipkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace lipkit::svg {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kMargin = 60;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;

  double X(double x) const {
    return kMargin + (x1 == x0 ? 0.5 : (x - x0) / (x1 - x0)) * (kWidth - 2 * kMargin);
  }
  double Y(double y) const {
    return kHeight - kMargin -
           (y1 == y0 ? 0.5 : (y - y0) / (y1 - y0)) * (kHeight - 2 * kMargin);
  }
};

void Header(std::ostringstream& os, const std::string& title, const std::string& x_label,
            const std::string& y_label, const Frame& f) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
     << Escape(title) << "</text>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
     << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
     << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
     << "\" text-anchor=\"middle\">" << Escape(x_label) << "</text>\n";
  os << "<text x=\"15\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
     << kHeight / 2 << ")\">" << Escape(y_label) << "</text>\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = f.x0 + (f.x1 - f.x0) * t / 4.0;
    const double yv = f.y0 + (f.y1 - f.y0) * t / 4.0;
    os << "<text x=\"" << f.X(xv) << "\" y=\"" << kHeight - kMargin + 16
       << "\" text-anchor=\"middle\">" << Fmt(xv) << "</text>\n";
    os << "<text x=\"" << kMargin - 6 << "\" y=\"" << f.Y(yv) + 4
       << "\" text-anchor=\"end\">" << Fmt(yv) << "</text>\n";
  }
}

Frame Bounds(const std::vector<std::pair<double, double>>& pts) {
  Frame f{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& [x, y] : pts) {
    f.x0 = std::min(f.x0, x);
    f.x1 = std::max(f.x1, x);
    f.y0 = std::min(f.y0, y);
    f.y1 = std::max(f.y1, y);
  }
  if (pts.empty()) f = {0, 1, 0, 1};
  return f;
}

}  // namespace

std::string LinePlot(const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<Series>& series,
                     bool log_y) {
  std::vector<Series> shown = series;
  std::vector<std::pair<double, double>> all;
  for (Series& s : shown) {
    std::vector<std::pair<double, double>> kept;
    for (auto [x, y] : s.points) {
      if (log_y) {
        if (!(y > 0.0)) continue;
        y = std::log10(y);
      }
      kept.emplace_back(x, y);
      all.emplace_back(x, y);
    }
    s.points = std::move(kept);
  }
  const Frame f = Bounds(all);
  std::ostringstream os;
  Header(os, title, x_label, log_y ? "log10 " + y_label : y_label, f);
  for (std::size_t k = 0; k < shown.size(); ++k) {
    const char* color = kColors[k % 5];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : shown[k].points) os << f.X(x) << "," << f.Y(y) << " ";
    os << "\"/>\n";
    for (const auto& [x, y] : shown[k].points) {
      os << "<circle cx=\"" << f.X(x) << "\" cy=\"" << f.Y(y) << "\" r=\"3\" fill=\"" << color
         << "\"/>\n";
    }
    os << "<text x=\"" << kWidth - kMargin - 150 << "\" y=\"" << kMargin + 16 * k
       << "\" fill=\"" << color << "\">" << Escape(shown[k].name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string ScatterPlot(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<ScatterPoint>& points) {
  std::vector<std::pair<double, double>> all;
  for (const ScatterPoint& p : points) all.emplace_back(p.x, p.y);
  const Frame f = Bounds(all);
  std::ostringstream os;
  Header(os, title, x_label, y_label, f);
  for (const ScatterPoint& p : points) {
    os << "<circle cx=\"" << f.X(p.x) << "\" cy=\"" << f.Y(p.y) << "\" r=\"4\" stroke=\""
       << kColors[0] << "\" fill=\"" << (p.filled ? kColors[0] : "none") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lipkit::svg
