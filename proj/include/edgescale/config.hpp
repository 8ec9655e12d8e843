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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "edgescale/sim_kernel.hpp"

namespace edgescale {

struct OutputOptions {
  std::filesystem::path dir = "out";
  bool samples = true;    // samples.csv
  bool smoothed = true;   // samples_smoothed.csv
  bool actions = true;    // actions.log
  std::size_t window = 10;
};

// Everything a `simulate` run needs. Defaults reproduce the reference
// experiment: Poisson arrivals with mean 1 s, exponential service with mean
// 5 s, target queue 25, |Kp| = 0.9, Ki = 0, |Kd| = 0.2, 1 s startup.
struct RunConfig {
  SimConfig sim;
  OutputOptions output;
};

// Dotted keys accepted in config files and by --set, in echo order.
const std::vector<std::string>& config_keys();

// Parses a YAML document of nested maps. Unknown keys, non-scalar leaves and
// unparsable values raise ConfigError with "<origin>:<line>: ..." context.
// The result is not validated; call validate() after applying overrides.
RunConfig parse_config(const std::string& yaml_text, std::string_view origin = "<config>");
RunConfig load_config(const std::filesystem::path& path);

// Applies one "key=value" override.
void apply_override(RunConfig& cfg, std::string_view assignment);
void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value);
std::string get_config_value(const RunConfig& cfg, std::string_view key);

// Throws ConfigError for the first invalid field.
void validate(const RunConfig& cfg);

// Fully resolved config as YAML; parse_config(to_yaml(c)) reproduces c.
std::string to_yaml(const RunConfig& cfg);

}  // namespace edgescale
