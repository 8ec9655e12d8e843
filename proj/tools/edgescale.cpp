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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgescale/commands.hpp"
#include "edgescale/errors.hpp"

namespace {

void add_config_options(CLI::App* cmd, edgescale::ConfigSource& src,
                        std::string& config_path, std::uint64_t& seed, double& horizon,
                        std::string& out) {
  cmd->add_option("--config", config_path, "YAML run configuration");
  cmd->add_option("--set", src.overrides, "Override a config value, e.g. control.target=25")
      ->allow_extra_args(false);
  cmd->add_option("--seed", seed, "RNG seed");
  cmd->add_option("--horizon", horizon, "Simulated time in seconds");
  cmd->add_option("--out", out, "Output directory");
}

void finish_config(CLI::App* cmd, edgescale::ConfigSource& src, const std::string& config_path,
                   std::uint64_t seed, double horizon, const std::string& out) {
  if (cmd->count("--config")) src.config = config_path;
  if (cmd->count("--seed")) src.seed = seed;
  if (cmd->count("--horizon")) src.horizon = horizon;
  if (cmd->count("--out")) src.out = out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-event simulator of a PID-driven horizontal autoscaler"};
  app.require_subcommand(1);

  edgescale::ConfigSource sim_src;
  std::string sim_config, sim_out;
  std::uint64_t sim_seed = 0;
  double sim_horizon = 0.0;
  auto* simulate = app.add_subcommand("simulate", "Run one simulation and write its traces");
  add_config_options(simulate, sim_src, sim_config, sim_seed, sim_horizon, sim_out);

  edgescale::ValidateArgs val;
  auto* validate = app.add_subcommand("validate", "Compare a fixed pool against Erlang C");
  validate->add_option("--lambda", val.params.lambda, "Arrival rate (1/s)");
  validate->add_option("--mu", val.params.mu, "Service rate per worker (1/s)");
  validate->add_option("--c", val.params.c, "Number of workers");
  validate->add_option("--requests", val.requests, "Requests to simulate");
  validate->add_option("--seed", val.seed, "RNG seed");
  validate->add_option("--tolerance", val.tolerance, "Allowed relative error of Lq");

  edgescale::ConfigSource sweep_src;
  std::string sweep_config, sweep_out, sweep_file;
  std::uint64_t sweep_seed = 0;
  double sweep_horizon = 0.0;
  std::vector<std::string> grid_axes;
  std::vector<std::uint64_t> sweep_seeds;
  bool serial = false;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid, one output directory per point");
  add_config_options(sweep, sweep_src, sweep_config, sweep_seed, sweep_horizon, sweep_out);
  sweep->add_option("--sweep", sweep_file, "YAML sweep spec with grid and seeds");
  sweep->add_option("--grid", grid_axes, "Grid axis key=v1,v2,...")->allow_extra_args(false);
  sweep->add_option("--seeds", sweep_seeds, "Seeds to run at every grid point")->delimiter(',');
  sweep->add_flag("--serial", serial, "Run grid points one after another");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) {
      finish_config(simulate, sim_src, sim_config, sim_seed, sim_horizon, sim_out);
      return edgescale::cmd_simulate(sim_src, std::cout, std::cerr);
    }
    if (*validate) {
      return edgescale::cmd_validate(val, std::cout, std::cerr);
    }
    if (*sweep) {
      finish_config(sweep, sweep_src, sweep_config, sweep_seed, sweep_horizon, sweep_out);
      edgescale::SweepSpec spec;
      try {
        if (!sweep_file.empty()) spec = edgescale::load_sweep_spec(sweep_file);
        for (const auto& axis : grid_axes) edgescale::add_grid_axis(spec, axis);
        spec.seeds.insert(spec.seeds.end(), sweep_seeds.begin(), sweep_seeds.end());
      } catch (const edgescale::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return edgescale::kExitConfigError;
      }
      return edgescale::cmd_sweep(sweep_src, spec,
                                  serial ? edgescale::Execution::Serial
                                         : edgescale::Execution::Parallel,
                                  std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
