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

#ifndef LIPKIT_SERIALIZATION_HPP_
#define LIPKIT_SERIALIZATION_HPP_

#include "json.hpp"
#include "lipkit/convex.hpp"
#include "lipkit/free_space.hpp"
#include "lipkit/lip_space.hpp"
#include "lipkit/metric.hpp"
#include "lipkit/porosity.hpp"

namespace lipkit {

using Json = nlohmann::json;

// {"n": int, "base": int, "dist": [[float]]}
Json ToJson(const FiniteMetricSpace& space);
FiniteMetricSpace SpaceFromJson(const Json& j);

// {"kind": "power"|"metric"|"raw", "alpha": float?, "values": [[float]]}
Json ToJson(const GaugePair& gauge);
GaugePair GaugePairFromJson(const Json& j);

// {"values": [[float]], "target": {"m": int, "norm": "l1"|"l2"|"linf"}}
Json ToJson(const PointFunction& f);
PointFunction FunctionFromJson(const Json& j, SpacePtr space);

const char* NormName(NormKind kind);
NormKind NormFromName(const std::string& name);

// {"pair": [a,b], "r", "s", "K", "radius", "lower_bound", "f", "p", "f_m"},
// plus "space" and "gauge" so a stored certificate is self-contained.
Json ToJson(const EscapeCertificate& cert);
EscapeCertificate CertificateFromJson(const Json& j);

// Named booleans with residuals plus "all_passed".
Json ToJson(const CheckReport& report);
Json ToJson(const ExclusionReport& report);

// {"weights": [float]}
Json ToJson(const Molecule& m);
Molecule MoleculeFromJson(const Json& j, SpacePtr space);
// Sparse triplets [i, j, mass].
Json ToJson(const std::vector<TransportEntry>& plan);

// {"dim": int, "rows": [[float]]}
Json ToJson(const PolyhedralGauge& gauge);
PolyhedralGauge PolyhedralGaugeFromJson(const Json& j);

}  // namespace lipkit

#endif  // LIPKIT_SERIALIZATION_HPP_
