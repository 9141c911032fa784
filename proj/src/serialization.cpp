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

#include "lipkit/serialization.hpp"

#include <string>

#include "lipkit/error.hpp"

namespace lipkit {
namespace {

Json MatrixJson(const DenseMatrix& m) { return m.ToRows(); }

DenseMatrix MatrixFromJson(const Json& j) {
  return DenseMatrix::FromRows(j.get<std::vector<std::vector<double>>>());
}

template <typename Fn>
auto Parse(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

Json CheckJson(const Check& c) { return {{"passed", c.passed}, {"residual", c.residual}}; }

}  // namespace

const char* NormName(NormKind kind) {
  switch (kind) {
    case NormKind::kL1: return "l1";
    case NormKind::kL2: return "l2";
    case NormKind::kLinf: return "linf";
  }
  return "l2";
}

NormKind NormFromName(const std::string& name) {
  if (name == "l1") return NormKind::kL1;
  if (name == "l2") return NormKind::kL2;
  if (name == "linf") return NormKind::kLinf;
  throw Error(ErrorCode::kParseError, "unknown norm '" + name + "'");
}

Json ToJson(const FiniteMetricSpace& space) {
  return {{"n", space.size()}, {"base", space.base()}, {"dist", MatrixJson(space.matrix())}};
}

FiniteMetricSpace SpaceFromJson(const Json& j) {
  return Parse("space", [&] {
    DenseMatrix d = MatrixFromJson(j.at("dist"));
    if (j.at("n").get<std::size_t>() != d.rows()) {
      throw Error(ErrorCode::kParseError, "space: n does not match dist");
    }
    return FiniteMetricSpace::Validate(d, j.at("base").get<std::size_t>());
  });
}

Json ToJson(const GaugePair& gauge) {
  Json j;
  switch (gauge.kind()) {
    case GaugePair::Kind::kMetricPower: j["kind"] = "power"; break;
    case GaugePair::Kind::kSecondMetric: j["kind"] = "metric"; break;
    case GaugePair::Kind::kRaw: j["kind"] = "raw"; break;
  }
  if (gauge.alpha()) j["alpha"] = *gauge.alpha();
  j["values"] = MatrixJson(gauge.values());
  return j;
}

GaugePair GaugePairFromJson(const Json& j) {
  return Parse("gauge", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    const DenseMatrix values = MatrixFromJson(j.at("values"));
    if (kind == "metric") return GaugePair::SecondMetric(values);
    if (kind == "raw") return GaugePair::Raw(values);
    if (kind == "power") {
      return GaugePair::Restore(GaugePair::Kind::kMetricPower, j.at("alpha").get<double>(),
                                values);
    }
    throw Error(ErrorCode::kParseError, "unknown gauge kind '" + kind + "'");
  });
}

Json ToJson(const PointFunction& f) {
  return {{"values", MatrixJson(f.values())},
          {"target", {{"m", f.target().m}, {"norm", NormName(f.target().norm)}}}};
}

PointFunction FunctionFromJson(const Json& j, SpacePtr space) {
  return Parse("function", [&] {
    TargetSpace target{j.at("target").at("m").get<std::size_t>(),
                       NormFromName(j.at("target").at("norm").get<std::string>())};
    return PointFunction(std::move(space), target, MatrixFromJson(j.at("values")));
  });
}

Json ToJson(const EscapeCertificate& cert) {
  return {{"pair", {cert.pair.i, cert.pair.j}},
          {"r", cert.r},
          {"s", cert.params.s},
          {"K", cert.witness.K},
          {"radius", cert.radius},
          {"lower_bound", cert.lower_bound},
          {"f", ToJson(cert.f)},
          {"p", ToJson(cert.witness.p)},
          {"f_m", ToJson(cert.f_m)},
          {"space", ToJson(*cert.f.space())},
          {"gauge", ToJson(cert.params.gauge)}};
}

EscapeCertificate CertificateFromJson(const Json& j) {
  return Parse("certificate", [&] {
    SpacePtr space = MakeSpace(SpaceFromJson(j.at("space")));
    const auto pair_values = j.at("pair").get<std::vector<std::size_t>>();
    if (pair_values.size() != 2) throw Error(ErrorCode::kParseError, "pair needs 2 entries");
    const PointPair pair{pair_values[0], pair_values[1]};
    ClassParams params(GaugePairFromJson(j.at("gauge")), j.at("s").get<double>());
    PorosityWitness witness{FunctionFromJson(j.at("p"), space), j.at("K").get<double>(), pair};
    return EscapeCertificate{FunctionFromJson(j.at("f"), space),
                             std::move(params),
                             pair,
                             j.at("r").get<double>(),
                             std::move(witness),
                             FunctionFromJson(j.at("f_m"), space),
                             j.at("radius").get<double>(),
                             j.at("lower_bound").get<double>()};
  });
}

Json ToJson(const CheckReport& report) {
  Json j;
  for (const Check& c : report.Checks()) j[c.name] = CheckJson(c);
  j["all_passed"] = report.AllPassed();
  return j;
}

Json ToJson(const ExclusionReport& report) {
  return {{"count", report.count},
          {"excluded", report.excluded},
          {"rate", report.Rate()},
          {"min_pair_ratio", report.min_pair_ratio},
          {"analytic_bound", report.analytic_bound},
          {"radius", report.radius_used}};
}

Json ToJson(const Molecule& m) { return {{"weights", m.weights()}}; }

Molecule MoleculeFromJson(const Json& j, SpacePtr space) {
  return Parse("molecule", [&] {
    return Molecule(std::move(space), j.at("weights").get<std::vector<double>>());
  });
}

Json ToJson(const std::vector<TransportEntry>& plan) {
  Json j = Json::array();
  for (const TransportEntry& e : plan) j.push_back({e.from, e.to, e.mass});
  return j;
}

Json ToJson(const PolyhedralGauge& gauge) {
  return {{"dim", gauge.dim()}, {"rows", MatrixJson(gauge.rows())}};
}

PolyhedralGauge PolyhedralGaugeFromJson(const Json& j) {
  return Parse("polyhedral gauge", [&] {
    return PolyhedralGauge(j.at("dim").get<std::size_t>(), MatrixFromJson(j.at("rows")));
  });
}

}  // namespace lipkit
