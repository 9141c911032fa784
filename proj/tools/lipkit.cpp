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

// Command-line front end. Links only the C interface.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lipkit/lipkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInvariant = 2;

int ExitCodeFor(lipkit_status status) {
  switch (status) {
    case LIPKIT_OK:
      return kExitOk;
    case LIPKIT_INVARIANT_VIOLATION:
    case LIPKIT_INTERNAL:
      return kExitInvariant;
    default:
      return kExitConfig;
  }
}

int Report(lipkit_status status) {
  if (status != LIPKIT_OK) {
    std::cerr << "lipkit: " << lipkit_last_error() << "\n";
  }
  return ExitCodeFor(status);
}

struct RunOptions {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string out;
  std::string formats = "json";
  // Copies given flags into params once parsing is done.
  std::vector<std::function<void()>> collect;
};

// Only flags present on the command line are forwarded; defaults live in the library.
template <typename T>
void Forward(CLI::App* cmd, RunOptions& run, const std::string& flag, const std::string& key,
             T& storage, const std::string& help) {
  CLI::Option* opt = cmd->add_option(flag, storage, help);
  run.collect.push_back([&run, key, &storage, opt] {
    if (opt->count() > 0) run.params[key] = storage;
  });
}

int RunExperiment(const std::string& name, RunOptions& run) {
  for (const auto& step : run.collect) step();
  char* report = nullptr;
  const lipkit_status status =
      lipkit_run_experiment(name.c_str(), run.params.dump().c_str(),
                            run.out.empty() ? nullptr : run.out.c_str(), run.formats.c_str(),
                            run.out.empty() ? &report : nullptr);
  if (report) {
    std::cout << nlohmann::json::parse(report).dump(2) << "\n";
    lipkit_string_free(report);
  } else if (status == LIPKIT_OK) {
    std::cout << "wrote " << name << " outputs to " << run.out << "\n";
  }
  return Report(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Porosity certificates for Lipschitz function spaces"};
  app.require_subcommand(1);

  RunOptions snow, dual, barrier;
  double alpha = 0, beta = 0, s_snow = 0, s_dual = 0;
  long long k_min = 0, k_max = 0, n_min = 0, n_max = 0, dim = 0, grid = 0;
  long long samples_snow = 0, samples_dual = 0, samples_barrier = 0, functions = 0;
  unsigned long long seed_snow = 0, seed_dual = 0, seed_barrier = 0;
  std::string preset;

  CLI::App* cmd = app.add_subcommand("snowflake", "Snowflake metrics on dyadic chains");
  Forward(cmd, snow, "--alpha", "alpha", alpha, "base metric exponent");
  Forward(cmd, snow, "--beta", "beta", beta, "gauge exponent");
  Forward(cmd, snow, "--s", "s", s_snow, "class bound");
  Forward(cmd, snow, "--k-min", "k_min", k_min, "smallest chain depth");
  Forward(cmd, snow, "--k-max", "k_max", k_max, "largest chain depth");
  Forward(cmd, snow, "--samples", "samples", samples_snow, "ball samples per certificate");
  Forward(cmd, snow, "--functions", "functions", functions, "sampled functions per depth");
  Forward(cmd, snow, "--seed", "seed", seed_snow, "random seed");
  cmd->add_option("--out", snow.out, "output directory");
  cmd->add_option("--format", snow.formats, "comma separated: json,csv,svg");

  CLI::App* dcmd = app.add_subcommand("dual-thinness", "l1 against l-infinity in R^n");
  Forward(dcmd, dual, "--n-min", "n_min", n_min, "smallest dimension");
  Forward(dcmd, dual, "--n-max", "n_max", n_max, "largest dimension");
  Forward(dcmd, dual, "--s", "s", s_dual, "class bound");
  Forward(dcmd, dual, "--samples", "samples", samples_dual, "ball samples per certificate");
  Forward(dcmd, dual, "--seed", "seed", seed_dual, "random seed");
  dcmd->add_option("--out", dual.out, "output directory");
  dcmd->add_option("--format", dual.formats, "comma separated: json,csv,svg");

  CLI::App* bcmd = app.add_subcommand("barrier", "Barrier cones of polyhedral gauges");
  Forward(bcmd, barrier, "--dim", "dim", dim, "ambient dimension");
  Forward(bcmd, barrier, "--preset", "preset", preset, "strip, box or random");
  Forward(bcmd, barrier, "--seed", "seed", seed_barrier, "random seed");
  Forward(bcmd, barrier, "--grid", "grid", grid, "grid points per axis");
  Forward(bcmd, barrier, "--samples", "samples", samples_barrier, "ball samples per certificate");
  bcmd->add_option("--out", barrier.out, "output directory");
  bcmd->add_option("--format", barrier.formats, "comma separated: json,csv,svg");

  std::string cert_path;
  CLI::App* vcmd = app.add_subcommand("verify", "Re-check a stored certificate");
  vcmd->add_option("certificate", cert_path, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (cmd->parsed()) return RunExperiment("snowflake", snow);
  if (dcmd->parsed()) return RunExperiment("dual-thinness", dual);
  if (bcmd->parsed()) return RunExperiment("barrier", barrier);

  int passed = 0;
  char* report = nullptr;
  const lipkit_status status = lipkit_verify_certificate_file(cert_path.c_str(), &passed, &report);
  if (status == LIPKIT_IO_ERROR || status == LIPKIT_PARSE_ERROR) return Report(status);
  if (status != LIPKIT_OK) {
    Report(status);
    return kExitInvariant;
  }
  std::cout << nlohmann::json::parse(report).dump(2) << "\n";
  lipkit_string_free(report);
  std::cout << (passed ? "certificate verified" : "certificate FAILED") << "\n";
  return passed ? kExitOk : kExitInvariant;
}
