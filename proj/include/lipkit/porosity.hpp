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

#ifndef LIPKIT_POROSITY_HPP_
#define LIPKIT_POROSITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lipkit/lip_space.hpp"
#include "lipkit/metric.hpp"

namespace lipkit {

// Tolerance for the witness and radius identities.
inline constexpr double kCertificateTolerance = 1e-12;

// A function p with ||p||_L <= K and ||p(a) - p(b)|| = d(a, b).
struct PorosityWitness {
  PointFunction p;
  double K;
  PointPair pair;
};

// p(x) = (d(x, b) - d(base, b)) e, which is 1-Lipschitz and realizes d(a, b)
// on the pair. An empty direction means the first basis vector of target.
PorosityWitness MetricWitness(const SpacePtr& space, PointPair pair, TargetSpace target,
                              std::vector<double> direction = {});

// Everything needed to show that the closed ball B(f_m, radius) misses the
// class N_{phi,s}: f_m = f + sqrt(r) p, radius = ||f_m - f||_L / (2K), and
// every g in the ball has phi-ratio at (a,b) at least 1/(2 sqrt r) - s > s.
struct EscapeCertificate {
  PointFunction f;
  ClassParams params;
  PointPair pair;
  double r;
  PorosityWitness witness;
  PointFunction f_m;
  double radius;
  double lower_bound;
};

// Strict threshold on r: r < 1/(16 s^2).
double RatioThreshold(double s);

// Uses the metric witness on pair with the default direction.
EscapeCertificate BuildEscape(const PointFunction& f, const ClassParams& params,
                              PointPair pair);
// Uses a caller-supplied witness; its pair is the certified pair.
EscapeCertificate BuildEscape(const PointFunction& f, const ClassParams& params,
                              const PorosityWitness& witness);

struct Check {
  std::string name;
  bool passed = false;
  // Signed margin: the slack of a checked inequality, or minus the absolute
  // error of a checked identity. Failing checks have a residual <= 0 (zero
  // only for a strict inequality met with equality).
  double residual = 0.0;
};

struct CheckReport {
  Check witness;
  Check threshold;
  Check radius;
  Check chain;
  Check membership;

  bool AllPassed() const {
    return witness.passed && threshold.passed && radius.passed && chain.passed &&
           membership.passed;
  }
  std::vector<Check> Checks() const {
    return {witness, threshold, radius, chain, membership};
  }
};

// Re-derives every certificate quantity from its stored fields. The chain
// check is analytic: it bounds the pair ratio of every g in the ball through
// the three-step inequality instead of sampling.
CheckReport VerifyCertificate(const EscapeCertificate& cert);

struct ExclusionReport {
  std::size_t count = 0;
  std::size_t excluded = 0;
  double min_pair_ratio = 0.0;
  double analytic_bound = 0.0;
  double radius_used = 0.0;
  bool AllExcluded() const { return excluded == count; }
  double Rate() const {
    return count == 0 ? 0.0 : static_cast<double>(excluded) / static_cast<double>(count);
  }
};

// Samples g = f_m + h with ||h||_L = u * radius_scale * radius, u ~ U[0,1],
// and records the phi-ratio of g at the certified pair. A sample counts as
// excluded when that ratio is strictly above s. radius_scale = 0 forces h = 0.
ExclusionReport SampleBallExclusion(const EscapeCertificate& cert, std::size_t count,
                                    std::uint64_t seed, double radius_scale = 1.0);

struct EscapeMember {
  PointFunction f;
  ClassParams params;
};

struct SkipRecord {
  std::size_t member = 0;
  double r = 0.0;
  double threshold = 0.0;
  std::string reason;
};

struct EscapeSequence {
  std::vector<std::size_t> members;  // member index of each certificate
  std::vector<EscapeCertificate> certificates;
  std::vector<SkipRecord> skipped;
};

// Certifies each member at the argmin pair of phi/d. Members whose ratio is
// not below the threshold are skipped and recorded.
EscapeSequence BuildEscapeSequence(const std::vector<EscapeMember>& family);

}  // namespace lipkit

#endif  // LIPKIT_POROSITY_HPP_
