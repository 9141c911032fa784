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

#include <cmath>

#include "doctest.h"
#include "lipkit/error.hpp"
#include "lipkit/serialization.hpp"

using namespace lipkit;

namespace {

EscapeCertificate SampleCertificate(std::uint64_t seed) {
  const auto chain = DyadicChain(14);
  const SpacePtr space = MakeSpace(Snowflake(chain, 0.5));
  const ClassParams params(GaugePair::MetricPower(chain, 1.0), 1.0);
  const auto f = SampleInClass(space, {2, NormKind::kL1}, params.gauge, 1.0, seed);
  return BuildEscape(f, params, GaugeRatioInf(*space, params.gauge).pair);
}

ErrorCode ParseCode(const std::string& text) {
  try {
    CertificateFromJson(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

}  // namespace

TEST_CASE("space and gauge round trips") {
  const auto space = Snowflake(DyadicChain(6), 0.3);
  CHECK(SpaceFromJson(Json::parse(ToJson(space).dump())) == space);
  const GaugePair power = GaugePair::MetricPower(DyadicChain(6), 0.7);
  CHECK(GaugePairFromJson(Json::parse(ToJson(power).dump())) == power);
  const GaugePair raw = GaugePair::Raw(DenseMatrix{{0, 0.25}, {0.25, 0}});
  CHECK(GaugePairFromJson(ToJson(raw)) == raw);
  const PolyhedralGauge g(3, DenseMatrix{{1, 2, 3}, {0, -1, 0.5}});
  const PolyhedralGauge back = PolyhedralGaugeFromJson(Json::parse(ToJson(g).dump()));
  CHECK(back.rows() == g.rows());
  CHECK(back.rank() == 2);
}

TEST_CASE("certificate round trip is bit exact and still verifies") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const EscapeCertificate cert = SampleCertificate(seed);
    const EscapeCertificate back = CertificateFromJson(Json::parse(ToJson(cert).dump()));
    CHECK(back.r == cert.r);
    CHECK(back.radius == cert.radius);
    CHECK(back.lower_bound == cert.lower_bound);
    CHECK(back.f == cert.f);
    CHECK(back.f_m == cert.f_m);
    CHECK(back.witness.p == cert.witness.p);
    CHECK(back.params.gauge == cert.params.gauge);
    CHECK(VerifyCertificate(back).AllPassed());
    CHECK(ToJson(back).dump() == ToJson(cert).dump());
  }
}

TEST_CASE("edited certificate files are caught") {
  const Json good = ToJson(SampleCertificate(1));
  Json radius = good;
  radius["radius"] = good["radius"].get<double>() * 2.0;
  CHECK_FALSE(VerifyCertificate(CertificateFromJson(radius)).AllPassed());
  Json s = good;
  s["s"] = 1e3;
  CHECK_FALSE(VerifyCertificate(CertificateFromJson(s)).threshold.passed);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK(ParseCode("{}") == ErrorCode::kParseError);
  CHECK(ParseCode(R"({"r": "x"})") == ErrorCode::kParseError);
  Json j = ToJson(SampleCertificate(2));
  j["f"]["target"]["norm"] = "l7";
  CHECK_THROWS_AS(CertificateFromJson(j), Error);
  CHECK_THROWS_AS(SpaceFromJson(Json::parse(R"({"n": 2, "base": 0, "dist": [[0, 1], [2, 0]]})")),
                  Error);
}

TEST_CASE("norm names") {
  for (NormKind k : {NormKind::kL1, NormKind::kL2, NormKind::kLinf}) {
    CHECK(NormFromName(NormName(k)) == k);
  }
  CHECK_THROWS_AS(NormFromName("l3"), Error);
}

TEST_CASE("molecules and reports serialize") {
  const SpacePtr chain = MakeSpace(DyadicChain(2));
  const Molecule m(chain, {-2.0, 1.0, 1.0});
  CHECK(MoleculeFromJson(ToJson(m), chain).weights() == m.weights());
  const Json report = ToJson(VerifyCertificate(SampleCertificate(3)));
  CHECK(report["all_passed"] == true);
  for (const char* name : {"witness", "threshold", "radius", "chain", "membership"}) {
    CHECK(report.contains(name));
  }
}
