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

#include "lipkit/experiments.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>

#include "lipkit/convex.hpp"
#include "lipkit/error.hpp"
#include "lipkit/porosity.hpp"
#include "lipkit/random.hpp"
#include "lipkit/svg.hpp"

namespace lipkit {
namespace {

[[noreturn]] void ConfigError(const std::string& msg) {
  throw Error(ErrorCode::kInvalidConfig, msg);
}

double GetDouble(const Json& p, const char* key, std::optional<double> fallback = {}) {
  if (!p.contains(key)) {
    if (fallback) return *fallback;
    ConfigError(std::string("missing parameter '") + key + "'");
  }
  if (!p.at(key).is_number()) ConfigError(std::string("'") + key + "' must be a number");
  const double v = p.at(key).get<double>();
  if (!std::isfinite(v)) ConfigError(std::string("'") + key + "' must be finite");
  return v;
}

std::int64_t GetInt(const Json& p, const char* key, std::optional<std::int64_t> fallback = {}) {
  if (!p.contains(key)) {
    if (fallback) return *fallback;
    ConfigError(std::string("missing parameter '") + key + "'");
  }
  if (!p.at(key).is_number_integer()) {
    ConfigError(std::string("'") + key + "' must be an integer");
  }
  return p.at(key).get<std::int64_t>();
}

std::uint64_t GetSeed(const Json& p) {
  if (!p.contains("seed")) ConfigError("missing parameter 'seed'");
  if (!p.at("seed").is_number_unsigned() && !p.at("seed").is_number_integer()) {
    ConfigError("'seed' must be a nonnegative integer");
  }
  if (p.at("seed").is_number_integer() && p.at("seed").get<std::int64_t>() < 0) {
    ConfigError("'seed' must be a nonnegative integer");
  }
  return p.at("seed").get<std::uint64_t>();
}

void CheckRange(bool ok, const std::string& msg) {
  if (!ok) ConfigError(msg);
}

TargetSpace GetTarget(const Json& p) {
  const std::int64_t m = GetInt(p, "m", 1);
  CheckRange(m >= 1 && m <= 16, "'m' must lie in [1, 16]");
  std::string norm = "l2";
  if (p.contains("norm")) {
    if (!p.at("norm").is_string()) ConfigError("'norm' must be a string");
    norm = p.at("norm").get<std::string>();
  }
  try {
    return {static_cast<std::size_t>(m), NormFromName(norm)};
  } catch (const Error&) {
    ConfigError("'norm' must be one of l1, l2, linf");
  }
}

std::string Cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string Csv(const std::vector<std::string>& columns, const Json& rows) {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << "\n";
  for (const Json& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << (c ? "," : "") << (row.contains(columns[c]) ? Cell(row.at(columns[c])) : "");
    }
    os << "\n";
  }
  return os.str();
}

void RequireVerified(const EscapeCertificate& cert, const std::string& where) {
  const CheckReport report = VerifyCertificate(cert);
  if (!report.AllPassed()) {
    throw Error(ErrorCode::kInvariantViolation,
                "certificate " + where + " failed verification: " + ToJson(report).dump());
  }
}

// Common per-certificate row fields.
void FillCertificateRow(Json& row, const EscapeCertificate& cert, const ExclusionReport& ex) {
  row["status"] = "certified";
  row["r"] = cert.r;
  row["radius"] = cert.radius;
  row["lower_bound"] = cert.lower_bound;
  row["lip_norm_p"] = LipNorm(cert.witness.p).value;
  row["exclusion_rate"] = ex.Rate();
  row["min_pair_ratio"] = ex.min_pair_ratio;
}

void FillSkipRow(Json& row, const Error& e) {
  row["status"] = "skipped";
  row["reason"] = e.what();
  row["radius"] = nullptr;
  row["lower_bound"] = nullptr;
  row["exclusion_rate"] = nullptr;
  row["min_pair_ratio"] = nullptr;
}

struct MemberResult {
  std::vector<Json> rows;
  std::vector<std::pair<std::string, Json>> certificates;
};

}  // namespace

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ExperimentOutput RunSnowflake(const Json& params) {
  const double alpha = GetDouble(params, "alpha");
  const double beta = GetDouble(params, "beta");
  const double s = GetDouble(params, "s");
  const std::int64_t k_min = GetInt(params, "k_min");
  const std::int64_t k_max = GetInt(params, "k_max");
  const std::int64_t samples = GetInt(params, "samples", 1000);
  const std::int64_t functions = GetInt(params, "functions", 3);
  const std::uint64_t seed = GetSeed(params);
  const TargetSpace target = GetTarget(params);
  CheckRange(alpha > 0.0 && alpha < beta && beta <= 1.0, "need 0 < alpha < beta <= 1");
  CheckRange(s > 0.0, "'s' must be positive");
  CheckRange(k_min >= 1 && k_max <= 40, "K range must lie within [1, 40]");
  CheckRange(k_min <= k_max, "K range is empty");
  CheckRange(samples >= 1 && samples <= 1000000, "'samples' must lie in [1, 1e6]");
  CheckRange(functions >= 0 && functions <= 64, "'functions' must lie in [0, 64]");

  std::vector<std::future<MemberResult>> jobs;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    jobs.push_back(std::async(std::launch::async, [=] {
      MemberResult out;
      const FiniteMetricSpace chain = DyadicChain(static_cast<int>(k));
      const SpacePtr space = MakeSpace(Snowflake(chain, alpha));
      const ClassParams cls(GaugePair::MetricPower(chain, beta), s);
      const PairValue best = GaugeRatioInf(*space, cls.gauge);
      for (std::int64_t fi = 0; fi <= functions; ++fi) {
        const PointFunction f =
            fi == 0 ? PointFunction::Zero(space, target)
                    : SampleInClass(space, target, cls.gauge, s,
                                    MixSeed(seed, static_cast<std::uint64_t>(k),
                                            static_cast<std::uint64_t>(fi)));
        Json row{{"K", k},
                 {"function", fi},
                 {"r_star", best.value},
                 {"pair_a", best.pair.i},
                 {"pair_b", best.pair.j},
                 {"threshold", RatioThreshold(s)}};
        try {
          const EscapeCertificate cert = BuildEscape(f, cls, best.pair);
          const std::string stem =
              "snowflake_K" + std::to_string(k) + "_f" + std::to_string(fi);
          RequireVerified(cert, stem);
          const ExclusionReport ex = SampleBallExclusion(
              cert, static_cast<std::size_t>(samples),
              MixSeed(seed, static_cast<std::uint64_t>(k), 1000 + static_cast<std::uint64_t>(fi)));
          FillCertificateRow(row, cert, ex);
          row["certificate"] = stem;
          out.certificates.emplace_back(stem, ToJson(cert));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kRatioTooLarge) throw;
          FillSkipRow(row, e);
        }
        out.rows.push_back(std::move(row));
      }
      return out;
    }));
  }

  ExperimentOutput result;
  Json rows = Json::array();
  svg::Series radius{"radius (f = 0)", {}};
  svg::Series r_star{"r*", {}};
  for (auto& job : jobs) {
    MemberResult m = job.get();
    for (Json& row : m.rows) {
      if (row["function"] == 0) {
        r_star.points.emplace_back(row["K"].get<double>(), row["r_star"].get<double>());
        if (row["status"] == "certified") {
          radius.points.emplace_back(row["K"].get<double>(), row["radius"].get<double>());
        }
      }
      rows.push_back(std::move(row));
    }
    for (auto& c : m.certificates) result.certificates.push_back(std::move(c));
  }
  result.report = {{"experiment", "snowflake"}, {"config", params}, {"rows", rows}};
  result.csv = Csv({"K", "function", "r_star", "pair_a", "pair_b", "threshold", "status",
                    "radius", "lower_bound", "lip_norm_p", "exclusion_rate", "min_pair_ratio"},
                   rows);
  result.svg = svg::LinePlot("Escape radius vs chain depth", "K", "value", {r_star, radius},
                             /*log_y=*/true);
  return result;
}

ExperimentOutput RunDualThinness(const Json& params) {
  const std::int64_t n_min = GetInt(params, "n_min", 2);
  const std::int64_t n_max = GetInt(params, "n_max", 64);
  const double s = GetDouble(params, "s");
  const std::int64_t samples = GetInt(params, "samples", 200);
  const std::uint64_t seed = GetSeed(params);
  CheckRange(n_min >= 2 && n_max <= 64, "n range must lie within [2, 64]");
  CheckRange(n_min <= n_max, "n range is empty");
  CheckRange(s > 0.0, "'s' must be positive");
  CheckRange(samples >= 1 && samples <= 1000000, "'samples' must lie in [1, 1e6]");

  std::vector<std::future<MemberResult>> jobs;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [=] {
      MemberResult out;
      const std::size_t dim = static_cast<std::size_t>(n);
      // Witness points: 0 (base), +e_i, -e_i, and the all-ones vector.
      DenseMatrix points(2 * dim + 2, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        points(1 + i, i) = 1.0;
        points(1 + dim + i, i) = -1.0;
        points(2 * dim + 1, i) = 1.0;
      }
      const SpacePtr space = MakeSpace(NormMetricSpace(points, NormKind::kL1, 0));
      const ClassParams cls(
          GaugePair::SecondMetric(NormMetricSpace(points, NormKind::kLinf, 0).matrix()), s);
      const PairValue best = GaugeRatioInf(*space, cls.gauge);
      const TargetSpace target = TargetSpace::Scalar();
      const DualVertexWitness dw =
          MakeDualVertexWitness(points, space, NormKind::kL1, best.pair, target);
      for (int fi = 0; fi <= 1; ++fi) {
        const PointFunction f =
            fi == 0 ? PointFunction::Zero(space, target)
                    : SampleInClass(space, target, cls.gauge, s,
                                    MixSeed(seed, static_cast<std::uint64_t>(n), 1));
        Json row{{"n", n},
                 {"function", fi},
                 {"r_star", best.value},
                 {"pair_a", best.pair.i},
                 {"pair_b", best.pair.j},
                 {"threshold", RatioThreshold(s)},
                 {"expected_lower_bound", std::sqrt(static_cast<double>(n)) / 2.0 - s}};
        try {
          const EscapeCertificate cert = BuildEscape(f, cls, dw.witness);
          const std::string stem = "dual_n" + std::to_string(n) + "_f" + std::to_string(fi);
          RequireVerified(cert, stem);
          const ExclusionReport ex =
              SampleBallExclusion(cert, static_cast<std::size_t>(samples),
                                  MixSeed(seed, static_cast<std::uint64_t>(n), 1000 + fi));
          FillCertificateRow(row, cert, ex);
          if (fi == 0) {
            // f = 0 is linear, so f_m = sqrt(r) x* is a dual vector.
            std::vector<double> functional = dw.functional.coords;
            for (double& c : functional) c *= std::sqrt(cert.r);
            row["f_m_functional"] = functional;
          }
          row["certificate"] = stem;
          out.certificates.emplace_back(stem, ToJson(cert));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kRatioTooLarge) throw;
          FillSkipRow(row, e);
        }
        out.rows.push_back(std::move(row));
      }
      return out;
    }));
  }

  ExperimentOutput result;
  Json rows = Json::array();
  svg::Series bound{"lower bound (f = 0)", {}};
  svg::Series reference{"sqrt(n)/2 - s", {}};
  for (auto& job : jobs) {
    MemberResult m = job.get();
    for (Json& row : m.rows) {
      if (row["function"] == 0) {
        reference.points.emplace_back(row["n"].get<double>(),
                                      row["expected_lower_bound"].get<double>());
        if (row["status"] == "certified") {
          bound.points.emplace_back(row["n"].get<double>(), row["lower_bound"].get<double>());
        }
      }
      rows.push_back(std::move(row));
    }
    for (auto& c : m.certificates) result.certificates.push_back(std::move(c));
  }
  result.report = {{"experiment", "dual-thinness"}, {"config", params}, {"rows", rows}};
  result.csv = Csv({"n", "function", "r_star", "threshold", "status", "lower_bound",
                    "expected_lower_bound", "radius", "exclusion_rate", "min_pair_ratio"},
                   rows);
  result.svg = svg::LinePlot("Escape strength vs dimension", "n", "lower bound",
                             {reference, bound});
  return result;
}

namespace {

PolyhedralGauge PresetGauge(const std::string& preset, std::size_t dim, Rng& rng) {
  if (preset == "box") {
    DenseMatrix rows(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) rows(i, i) = 1.0;
    return PolyhedralGauge(dim, rows);
  }
  if (preset == "strip") {
    DenseMatrix rows(1, dim);
    rows(0, 0) = 1.0;
    return PolyhedralGauge(dim, rows);
  }
  // Integer rows spanning a (dim-1)-dimensional subspace, so the rank
  // deficiency is exact.
  const std::size_t rank = dim - 1;
  for (;;) {
    DenseMatrix basis(rank, dim);
    for (std::size_t t = 0; t < rank; ++t) {
      for (std::size_t i = 0; i < dim; ++i) basis(t, i) = static_cast<double>(rng.Integer(-3, 3));
    }
    DenseMatrix rows(dim + 1, dim);
    for (std::size_t k = 0; k < rows.rows(); ++k) {
      for (std::size_t t = 0; t < rank; ++t) {
        const double c = static_cast<double>(rng.Integer(-2, 2));
        for (std::size_t i = 0; i < dim; ++i) rows(k, i) += c * basis(t, i);
      }
    }
    PolyhedralGauge g(dim, rows);
    if (g.rank() == rank) return g;
  }
}

// Candidate points of X for the dual certificates, deduplicated.
DenseMatrix CertificatePoints(std::size_t dim, const std::optional<std::vector<double>>& w) {
  std::vector<std::vector<double>> pts{std::vector<double>(dim, 0.0)};
  auto add = [&](std::vector<double> p) {
    for (const auto& q : pts) {
      double gap = 0.0;
      for (std::size_t i = 0; i < dim; ++i) gap = std::max(gap, std::fabs(p[i] - q[i]));
      if (gap < 1e-9) return;
    }
    pts.push_back(std::move(p));
  };
  if (w) {
    std::vector<double> dir = *w;
    const double scale = Norm(dir, NormKind::kLinf);
    for (double& v : dir) v /= scale;
    add(dir);
    for (double& v : dir) v = -v;
    add(dir);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> e(dim, 0.0);
    e[i] = 1.0;
    add(e);
    e[i] = -1.0;
    add(e);
  }
  return DenseMatrix::FromRows(pts);
}

}  // namespace

ExperimentOutput RunBarrierDemo(const Json& params) {
  const std::int64_t dim_in = GetInt(params, "dim", 2);
  if (!params.contains("preset") || !params.at("preset").is_string()) {
    ConfigError("'preset' must be one of strip, box, random");
  }
  const std::string preset = params.at("preset").get<std::string>();
  const std::int64_t grid = GetInt(params, "grid", 21);
  const std::int64_t samples = GetInt(params, "samples", 200);
  CheckRange(preset == "strip" || preset == "box" || preset == "random",
             "'preset' must be one of strip, box, random");
  CheckRange(dim_in >= 1 && dim_in <= 6, "'dim' must lie in [1, 6]");
  CheckRange(preset == "box" || dim_in >= 2, "strip and random presets need dim >= 2");
  CheckRange(grid >= 2 && grid <= 101, "'grid' must lie in [2, 101]");
  CheckRange(samples >= 1 && samples <= 1000000, "'samples' must lie in [1, 1e6]");
  std::uint64_t seed = 0;
  if (preset == "random" || params.contains("seed")) seed = GetSeed(params);
  const std::size_t dim = static_cast<std::size_t>(dim_in);

  Rng rng(MixSeed(seed, 0xBA771E5));
  const PolyhedralGauge gauge = PresetGauge(preset, dim, rng);
  const Boundedness bounded = BoundednessCheck(gauge);
  const double sphere_min = MinOnUnitSphere(gauge.rows(), NormKind::kLinf);
  if (bounded.bounded != (sphere_min > 1e-9)) {
    throw Error(ErrorCode::kInvariantViolation, "boundedness disagrees with sphere minimum");
  }

  Json grid_rows = Json::array();
  std::vector<svg::ScatterPoint> scatter;
  std::size_t in_barrier = 0, in_polar = 0, in_span = 0;
  const std::size_t axes = std::min<std::size_t>(dim, 2);
  const std::size_t total = axes == 1 ? grid : grid * grid;
  for (std::size_t t = 0; t < total; ++t) {
    const std::size_t ia = t % grid;
    const std::size_t ib = t / grid;
    DualVector xstar{std::vector<double>(dim, 0.0)};
    const double a = -1.0 + 2.0 * static_cast<double>(ia) / static_cast<double>(grid - 1);
    const double b = -1.0 + 2.0 * static_cast<double>(ib) / static_cast<double>(grid - 1);
    xstar.coords[0] = a;
    if (axes == 2) xstar.coords[1] = b;
    const SupportValue sv = ComputeSupportValue(gauge, xstar);
    const bool barrier = !IsUnbounded(sv);
    const bool polar = barrier && std::get<double>(sv) <= 1.0 + 1e-12;
    const bool span = RowSpanContains(gauge, xstar);
    const bool level = LevelSetSupportFinite(gauge, xstar);
    if (barrier != span || barrier != level) {
      throw Error(ErrorCode::kInvariantViolation, "LP and span tests disagree on barrier");
    }
    in_barrier += barrier;
    in_polar += polar;
    in_span += span;
    Json row{{"a", a}, {"barrier", barrier}, {"polar", polar}, {"row_span", span}};
    if (axes == 2) row["b"] = b;
    row["support"] = barrier ? Json(std::get<double>(sv)) : Json("unbounded");
    grid_rows.push_back(std::move(row));
    scatter.push_back({a, axes == 2 ? b : 0.0, barrier});
  }

  // Porosity certificates in the dual: points of X with the sup-norm metric,
  // gauge phi_eps(x, x') = max(G(x - x'), eps ||x - x'||_inf). For a
  // degenerate G the ratio inf is eps, which shrinks along the family.
  const DenseMatrix points = CertificatePoints(dim, bounded.witness);
  const SpacePtr space = MakeSpace(NormMetricSpace(points, NormKind::kLinf, 0));
  std::vector<double> eps_family;
  if (bounded.bounded) {
    eps_family.push_back(0.0);
  } else {
    for (int k = 2; k <= 6; ++k) eps_family.push_back(std::ldexp(1.0, -2 * k));
  }
  std::optional<std::vector<double>> linear_row;
  for (std::size_t k = 0; k < gauge.rows().rows() && !linear_row; ++k) {
    const auto row = gauge.rows().row(k);
    if (Norm(row, NormKind::kLinf) > 0.0) linear_row = std::vector<double>(row.begin(), row.end());
  }
  Json cert_rows = Json::array();
  ExperimentOutput result;
  const TargetSpace target = TargetSpace::Scalar();
  for (std::size_t e = 0; e < eps_family.size(); ++e) {
    const double eps = eps_family[e];
    DenseMatrix phi(points.rows(), points.rows());
    std::vector<double> diff(dim);
    for (std::size_t i = 0; i < points.rows(); ++i) {
      for (std::size_t j = i + 1; j < points.rows(); ++j) {
        for (std::size_t c = 0; c < dim; ++c) diff[c] = points(i, c) - points(j, c);
        phi(i, j) = phi(j, i) =
            std::max(GaugeEval(gauge, diff), eps * Norm(diff, NormKind::kLinf));
      }
    }
    const ClassParams cls(GaugePair::SecondMetric(phi), 1.0);
    const PairValue best = GaugeRatioInf(*space, cls.gauge);
    const DualVertexWitness dw =
        MakeDualVertexWitness(points, space, NormKind::kLinf, best.pair, target);
    const int members = linear_row ? 2 : 1;
    for (int fi = 0; fi < members; ++fi) {
      // f = 0 or the linear functional of the first nonzero gauge row, which
      // has phi-seminorm at most 1.
      std::vector<double> functional(dim, 0.0);
      if (fi == 1) functional = *linear_row;
      std::vector<double> values(points.rows(), 0.0);
      for (std::size_t x = 1; x < points.rows(); ++x) {
        for (std::size_t c = 0; c < dim; ++c) values[x] += functional[c] * points(x, c);
      }
      const PointFunction f = PointFunction::Scalar(space, values);
      Json row{{"eps", eps},
               {"function", fi},
               {"r_star", best.value},
               {"pair_a", best.pair.i},
               {"pair_b", best.pair.j},
               {"threshold", RatioThreshold(cls.s)},
               {"f_functional", functional}};
      try {
        const EscapeCertificate cert = BuildEscape(f, cls, dw.witness);
        const std::string stem = "barrier_e" + std::to_string(e) + "_f" + std::to_string(fi);
        RequireVerified(cert, stem);
        const ExclusionReport ex = SampleBallExclusion(
            cert, static_cast<std::size_t>(samples), MixSeed(seed, e, 1000 + fi));
        FillCertificateRow(row, cert, ex);
        std::vector<double> moved = functional;
        for (std::size_t c = 0; c < dim; ++c) moved[c] += std::sqrt(cert.r) * dw.functional.coords[c];
        row["f_m_functional"] = moved;
        row["f_m_in_barrier"] = BarrierMembership(gauge, DualVector{moved});
        row["certificate"] = stem;
        result.certificates.emplace_back(stem, ToJson(cert));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kRatioTooLarge) throw;
        FillSkipRow(row, err);
      }
      cert_rows.push_back(std::move(row));
    }
  }

  Json boundedness{{"bounded", bounded.bounded}, {"min_gauge_on_unit_sphere", sphere_min}};
  boundedness["witness"] = bounded.witness ? Json(*bounded.witness) : Json(nullptr);
  const double denom = static_cast<double>(total);
  result.report = {{"experiment", "barrier"},
                   {"config", params},
                   {"gauge", ToJson(gauge)},
                   {"boundedness", boundedness},
                   {"grid", grid_rows},
                   {"summary",
                    {{"grid_points", total},
                     {"barrier_fraction", static_cast<double>(in_barrier) / denom},
                     {"polar_fraction", static_cast<double>(in_polar) / denom},
                     {"row_span_fraction", static_cast<double>(in_span) / denom}}},
                   {"certificates", cert_rows}};
  result.csv = Csv({"a", "b", "support", "barrier", "polar", "row_span"}, grid_rows);
  result.svg = svg::ScatterPlot("Barrier cone membership on the dual grid (filled = member)",
                                "x*_1", axes == 2 ? "x*_2" : "", scatter);
  return result;
}

ExperimentOutput RunExperiment(const ExperimentConfig& config) {
  for (const std::string& f : config.formats) {
    if (f != "json" && f != "csv" && f != "svg") ConfigError("unknown format '" + f + "'");
  }
  if (!config.params.is_object()) ConfigError("parameters must be a JSON object");
  ExperimentOutput out;
  if (config.name == "snowflake") {
    out = RunSnowflake(config.params);
  } else if (config.name == "dual-thinness") {
    out = RunDualThinness(config.params);
  } else if (config.name == "barrier") {
    out = RunBarrierDemo(config.params);
  } else {
    ConfigError("unknown experiment '" + config.name + "'");
  }
  if (!config.output.empty()) WriteOutputs(config.name, out, config.output, config.formats);
  return out;
}

namespace {

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
  if (!os) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace

void WriteOutputs(const std::string& name, const ExperimentOutput& out,
                  const std::filesystem::path& dir, const std::set<std::string>& formats) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string());
  if (formats.count("json")) {
    WriteFile(dir / (name + ".json"), out.report.dump(2) + "\n");
    if (!out.certificates.empty()) {
      std::filesystem::create_directories(dir / "certificates", ec);
      if (ec) throw Error(ErrorCode::kIoError, "cannot create certificates directory");
      for (const auto& [stem, cert] : out.certificates) {
        WriteFile(dir / "certificates" / (stem + ".json"), cert.dump(2) + "\n");
      }
    }
  }
  if (formats.count("csv")) WriteFile(dir / (name + ".csv"), out.csv);
  if (formats.count("svg")) WriteFile(dir / (name + ".svg"), out.svg);
}

CheckReport VerifyCertificateFile(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(is);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
  return VerifyCertificate(CertificateFromJson(j));
}

}  // namespace lipkit
