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

#include "lipkit/porosity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lipkit/error.hpp"
#include "lipkit/random.hpp"

namespace lipkit {
namespace {

double PairRatio(const PointFunction& g, const GaugePair& gauge, PointPair pair) {
  return g.GapNorm(pair.i, pair.j) / gauge(pair.i, pair.j);
}

std::string Num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

PorosityWitness MetricWitness(const SpacePtr& space, PointPair pair, TargetSpace target,
                              std::vector<double> direction) {
  const std::size_t n = space->size();
  if (pair.i >= n || pair.j >= n) {
    throw Error(ErrorCode::kInvalidArgument, "pair index out of range");
  }
  if (pair.i == pair.j) {
    throw Error(ErrorCode::kDegeneratePair, "witness pair needs a != b", {pair.i, pair.j});
  }
  if (direction.empty()) {
    direction.assign(target.m, 0.0);
    direction[0] = 1.0;
  }
  if (direction.size() != target.m) {
    throw Error(ErrorCode::kDimensionMismatch, "direction must have m coordinates");
  }
  if (std::fabs(Norm(direction, target.norm) - 1.0) > kCertificateTolerance) {
    throw Error(ErrorCode::kNonUnitDirection, "direction must have unit norm");
  }
  const std::size_t b = pair.j;
  const double offset = space->dist(space->base(), b);
  DenseMatrix v(n, target.m);
  for (std::size_t x = 0; x < n; ++x) {
    const double scale = x == space->base() ? 0.0 : space->dist(x, b) - offset;
    for (std::size_t c = 0; c < target.m; ++c) v(x, c) = scale * direction[c];
  }
  return {PointFunction(space, target, std::move(v)), 1.0, pair};
}

double RatioThreshold(double s) { return 1.0 / (16.0 * s * s); }

EscapeCertificate BuildEscape(const PointFunction& f, const ClassParams& params,
                              PointPair pair) {
  if (pair.i == pair.j) {
    throw Error(ErrorCode::kDegeneratePair, "escape pair needs a != b", {pair.i, pair.j});
  }
  return BuildEscape(f, params, MetricWitness(f.space(), pair, f.target()));
}

EscapeCertificate BuildEscape(const PointFunction& f, const ClassParams& params,
                              const PorosityWitness& witness) {
  const FiniteMetricSpace& space = *f.space();
  const PointPair pair = witness.pair;
  if (params.gauge.size() != space.size() || witness.p.space()->size() != space.size() ||
      !(witness.p.target() == f.target())) {
    throw Error(ErrorCode::kDimensionMismatch, "certificate inputs do not match");
  }
  if (pair.i == pair.j) {
    throw Error(ErrorCode::kDegeneratePair, "escape pair needs a != b", {pair.i, pair.j});
  }
  if (!InClass(f, params)) {
    throw Error(ErrorCode::kNotInClass, "f is not in N_{phi,s}");
  }
  const double r = params.gauge(pair.i, pair.j) / space.dist(pair.i, pair.j);
  const double threshold = RatioThreshold(params.s);
  if (!(r < threshold)) {
    throw Error(ErrorCode::kRatioTooLarge,
                "r = " + Num(r) + " is not below 1/(16 s^2) = " + Num(threshold),
                {pair.i, pair.j});
  }
  const double root = std::sqrt(r);
  PointFunction f_m = f + witness.p.Scaled(root);
  const double radius = LipNorm(f_m - f).value / (2.0 * witness.K);
  EscapeCertificate cert{f,       params, pair,   r, witness, std::move(f_m),
                         radius, 1.0 / (2.0 * root) - params.s};
  const CheckReport report = VerifyCertificate(cert);
  if (!report.AllPassed()) {
    throw Error(ErrorCode::kInvariantViolation, "constructed certificate fails checks");
  }
  return cert;
}

CheckReport VerifyCertificate(const EscapeCertificate& cert) {
  CheckReport rep;
  rep.witness.name = "witness";
  rep.threshold.name = "threshold";
  rep.radius.name = "radius";
  rep.chain.name = "chain";
  rep.membership.name = "membership";

  const SpacePtr& space = cert.f.space();
  const std::size_t n = space->size();
  const PointPair pair = cert.pair;
  const GaugePair& gauge = cert.params.gauge;
  const bool shapes_ok = n >= 2 && pair.i < n && pair.j < n && pair.i != pair.j &&
                         gauge.size() == n && cert.witness.p.space()->size() == n &&
                         cert.f_m.space()->size() == n &&
                         cert.witness.p.target() == cert.f.target() &&
                         cert.f_m.target() == cert.f.target() &&
                         cert.witness.pair == pair && cert.witness.K > 0.0;
  if (!shapes_ok) {
    rep.witness.residual = -1.0;
    return rep;
  }
  const double d_ab = space->dist(pair.i, pair.j);
  const double phi_ab = gauge(pair.i, pair.j);

  // (1) ||p||_L <= K, ||p(a) - p(b)|| = d(a,b), p(base) = 0 (enforced by type).
  {
    const double lip_p = LipNorm(cert.witness.p).value;
    const double gap_err = std::fabs(cert.witness.p.GapNorm(pair.i, pair.j) - d_ab);
    const double slack = cert.witness.K - lip_p;
    rep.witness.passed = slack >= -kCertificateTolerance && gap_err <= kCertificateTolerance;
    rep.witness.residual = std::min(slack, -gap_err);
  }

  // (2) stored r matches phi/d at the pair and r < 1/(16 s^2).
  const double r_recomputed = phi_ab / d_ab;
  {
    const double threshold = RatioThreshold(cert.params.s);
    rep.threshold.residual =
        std::min(threshold - cert.r, -std::fabs(cert.r - r_recomputed));
    rep.threshold.passed = cert.r == r_recomputed && cert.r > 0.0 && cert.r < threshold;
  }

  // (3) f_m = f + sqrt(r) p and radius = ||f_m - f||_L / (2K).
  const double root = std::sqrt(cert.r);
  {
    const PointFunction expected = cert.f + cert.witness.p.Scaled(root);
    double f_m_err = 0.0;
    for (std::size_t k = 0; k < expected.values().data().size(); ++k) {
      f_m_err = std::max(f_m_err, std::fabs(expected.values().data()[k] -
                                            cert.f_m.values().data()[k]));
    }
    const double radius_expected = LipNorm(cert.f_m - cert.f).value / (2.0 * cert.witness.K);
    const double radius_err = std::fabs(cert.radius - radius_expected);
    rep.radius.residual = -std::max(f_m_err, radius_err);
    rep.radius.passed = f_m_err <= kCertificateTolerance &&
                        radius_err <= kCertificateTolerance && cert.radius >= 0.0;
  }

  // (4) For g with ||g - f_m||_L <= radius:
  //   ratio_g(a,b) >= ratio_{f_m}(a,b) - radius d(a,b)/phi(a,b)
  //               >= (1/sqrt(r) - s) - 1/(2 sqrt(r)) = 1/(2 sqrt(r)) - s > s.
  {
    const double inv_root = 1.0 / root;
    const double scale = std::max(1.0, inv_root);
    const double tol = kCertificateTolerance * scale;
    const double ratio_fm = PairRatio(cert.f_m, gauge, pair);
    const double step1 = ratio_fm - (inv_root - cert.params.s);
    const double step2 = inv_root / 2.0 - cert.radius * d_ab / phi_ab;
    const double bound = inv_root / 2.0 - cert.params.s;
    const double step3 = bound - cert.params.s;
    const double stored_err = std::fabs(cert.lower_bound - bound);
    rep.chain.passed = step1 >= -tol && step2 >= -tol && step3 > 0.0 && stored_err <= tol;
    rep.chain.residual = std::min({step1, step2, step3, -stored_err});
  }

  // (5) f in N_{phi,s}.
  {
    const double seminorm = GaugeSeminorm(cert.f, gauge).value;
    rep.membership.residual = cert.params.s - seminorm;
    rep.membership.passed = seminorm <= cert.params.s;
  }
  return rep;
}

ExclusionReport SampleBallExclusion(const EscapeCertificate& cert, std::size_t count,
                                    std::uint64_t seed, double radius_scale) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "count must be >= 1");
  if (!(radius_scale >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "radius scale must be >= 0");
  }
  const SpacePtr& space = cert.f.space();
  const std::size_t n = space->size();
  const std::size_t m = cert.f.target().m;
  const double radius = cert.radius * radius_scale;
  const double root = std::sqrt(cert.r);

  ExclusionReport rep;
  rep.count = count;
  rep.radius_used = radius;
  rep.analytic_bound = 1.0 / (2.0 * root) - cert.params.s;
  rep.min_pair_ratio = std::numeric_limits<double>::infinity();

  Rng rng(seed);
  DenseMatrix h(n, m);
  for (std::size_t t = 0; t < count; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < m; ++c) {
        h(i, c) = i == space->base() ? 0.0 : rng.Uniform(-1.0, 1.0);
      }
    }
    const double u = rng.Uniform();
    PointFunction direction(space, cert.f.target(), h);
    const double lip = LipNorm(direction).value;
    const double target_norm = u * radius;
    PointFunction g = cert.f_m;
    if (lip > 0.0 && target_norm > 0.0) {
      g = cert.f_m + direction.Scaled(target_norm / lip);
    }
    const double ratio = PairRatio(g, cert.params.gauge, cert.pair);
    rep.min_pair_ratio = std::min(rep.min_pair_ratio, ratio);
    if (ratio > cert.params.s) ++rep.excluded;
  }
  return rep;
}

EscapeSequence BuildEscapeSequence(const std::vector<EscapeMember>& family) {
  EscapeSequence out;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const EscapeMember& member = family[k];
    const PairValue best = GaugeRatioInf(*member.f.space(), member.params.gauge);
    try {
      out.certificates.push_back(BuildEscape(member.f, member.params, best.pair));
      out.members.push_back(k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRatioTooLarge) throw;
      out.skipped.push_back({k, best.value, RatioThreshold(member.params.s), e.what()});
    }
  }
  return out;
}

}  // namespace lipkit
