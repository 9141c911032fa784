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

#ifndef LIPKIT_EXPERIMENTS_HPP_
#define LIPKIT_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lipkit/serialization.hpp"

namespace lipkit {

struct ExperimentConfig {
  std::string name;  // "snowflake", "dual-thinness" or "barrier"
  Json params;
  std::filesystem::path output;  // empty: nothing is written
  std::set<std::string> formats{"json"};
};

struct ExperimentOutput {
  Json report;  // source of truth; CSV and SVG are derived from it
  std::string csv;
  std::string svg;
  // (file stem, certificate JSON) for every certificate that was built.
  std::vector<std::pair<std::string, Json>> certificates;
};

// Each run validates its parameters (InvalidConfig on failure) and aborts
// with InvariantViolation if any built certificate fails verification.
ExperimentOutput RunSnowflake(const Json& params);
ExperimentOutput RunDualThinness(const Json& params);
ExperimentOutput RunBarrierDemo(const Json& params);

// Dispatches on config.name and writes <name>.json/.csv/.svg plus
// certificates/<stem>.json under config.output for the requested formats.
ExperimentOutput RunExperiment(const ExperimentConfig& config);

void WriteOutputs(const std::string& name, const ExperimentOutput& out,
                  const std::filesystem::path& dir, const std::set<std::string>& formats);

// Re-checks a stored certificate file.
CheckReport VerifyCertificateFile(const std::filesystem::path& path);

// Deterministic per-member seed.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace lipkit

#endif  // LIPKIT_EXPERIMENTS_HPP_
