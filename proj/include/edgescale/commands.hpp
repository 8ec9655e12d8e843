// Copyright 2026 The edgescale Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgescale/batch.hpp"
#include "edgescale/config.hpp"
#include "edgescale/mmc_oracle.hpp"

namespace edgescale {

// Process exit codes of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitConfigError = 2;

// Shared by simulate and sweep. Precedence, lowest first: built-in defaults,
// the config file, --set overrides in order, then --seed/--horizon/--out.
struct ConfigSource {
  std::optional<std::filesystem::path> config;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<double> horizon;
  std::optional<std::filesystem::path> out;
};

RunConfig resolve_config(const ConfigSource& source);

// Writes config.yaml, summary.json and, per the output toggles, samples.csv,
// samples_smoothed.csv and actions.log into cfg.output.dir.
void write_run_outputs(const RunConfig& cfg, const SimResult& result);

int cmd_simulate(const ConfigSource& source, std::ostream& out, std::ostream& err);

struct ValidateArgs {
  MmcParams params{1.0, 0.2, 6};
  std::uint64_t requests = 1'000'000;
  std::uint64_t seed = 1;
  double tolerance = 0.05;
};

struct ValidationReport {
  double simulated_lq = 0.0;
  double analytic_lq = 0.0;
  double relative_error = 0.0;
  std::uint64_t requests = 0;
  bool passed = false;
};

// Fixed pool of c workers, controller disabled, Poisson(lambda) arrivals and
// exponential(1/mu) service; compares the time-average queue length with
// Erlang C. Throws UnstableSystem / InvalidArgument for bad parameters.
ValidationReport validate_fixed_pool(const ValidateArgs& args);

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);

struct SweepSpec {
  std::vector<std::pair<std::string, std::vector<std::string>>> grid;
  std::vector<std::uint64_t> seeds;
};

// YAML of the form
//   grid:
//     control.target: [5, 25, 50]
//   seeds: [1, 2, 3]
SweepSpec load_sweep_spec(const std::filesystem::path& path);
SweepSpec parse_sweep_spec(const std::string& yaml_text, std::string_view origin = "<sweep>");
// "control.target=5,25,50"
void add_grid_axis(SweepSpec& spec, std::string_view axis);

struct SweepPoint {
  RunConfig config;
  std::vector<std::pair<std::string, std::string>> assignment;  // grid values + seed
};

// Cartesian product of the grid axes times the seeds, in row-major order
// with seeds varying fastest. Each point writes to <base out>/run_NNNN.
std::vector<SweepPoint> expand_sweep(const RunConfig& base, const SweepSpec& spec);

int cmd_sweep(const ConfigSource& source, const SweepSpec& spec, Execution exec,
              std::ostream& out, std::ostream& err);

}  // namespace edgescale
