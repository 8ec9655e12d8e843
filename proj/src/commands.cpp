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

#include "edgescale/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "edgescale/batch.hpp"
#include "edgescale/errors.hpp"

namespace edgescale {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

void print_summary(std::ostream& out, const RunSummary& s) {
  out << "time-average W      " << s.time_average_w << '\n'
      << "time-average P      " << s.time_average_p << '\n'
      << "max W               " << s.max_w << '\n'
      << "requests generated  " << s.requests_generated << '\n'
      << "requests served     " << s.requests_served << '\n'
      << "mean response time  " << s.mean_response_time << " s\n"
      << "workers created     " << s.creations << '\n'
      << "workers destroyed   " << s.destructions << '\n';
}

}  // namespace

RunConfig resolve_config(const ConfigSource& source) {
  RunConfig cfg = source.config ? load_config(*source.config) : RunConfig{};
  for (const auto& o : source.overrides) {
    try {
      apply_override(cfg, o);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("--set ") + o + ": " + e.what());
    }
  }
  if (source.seed) cfg.sim.seed = *source.seed;
  if (source.horizon) cfg.sim.horizon = *source.horizon;
  if (source.out) cfg.output.dir = *source.out;
  validate(cfg);
  return cfg;
}

void write_run_outputs(const RunConfig& cfg, const SimResult& result) {
  const auto& dir = cfg.output.dir;
  std::filesystem::create_directories(dir);
  write_file(dir / "config.yaml", to_yaml(cfg));
  write_file(dir / "summary.json", summary_to_json(result.summary));
  if (cfg.output.samples) {
    std::ostringstream s;
    write_samples_csv(s, result.samples);
    write_file(dir / "samples.csv", s.str());
  }
  if (cfg.output.smoothed) {
    std::ostringstream s;
    write_smoothed_csv(s, smooth_samples(result.samples, cfg.output.window));
    write_file(dir / "samples_smoothed.csv", s.str());
  }
  if (cfg.output.actions) {
    std::ostringstream s;
    write_action_log(s, result.actions);
    write_file(dir / "actions.log", s.str());
  }
}

int cmd_simulate(const ConfigSource& source, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = resolve_config(source);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  SimConfig sim = cfg.sim;
  sim.record_samples = cfg.output.samples || cfg.output.smoothed;
  sim.record_actions = cfg.output.actions;
  SimResult result;
  try {
    result = run(sim);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  write_run_outputs(cfg, result);
  print_summary(out, result.summary);
  out << "outputs written to " << cfg.output.dir.string() << '\n';
  return kExitOk;
}

ValidationReport validate_fixed_pool(const ValidateArgs& args) {
  ValidationReport report;
  report.analytic_lq = mean_queue_length(args.params);

  SimConfig sim;
  sim.seed = args.seed;
  sim.horizon = std::numeric_limits<double>::max();
  sim.workload.kind = WorkloadDescriptor::Kind::Poisson;
  sim.workload.mean_interarrival = 1.0 / args.params.lambda;
  sim.workload.limit = args.requests;
  sim.service_time = {Distribution::Kind::Exponential, 1.0 / args.params.mu};
  sim.control_enabled = false;
  sim.target.p_min = args.params.c;
  sim.target.p_max = args.params.c;
  sim.initial_pool = args.params.c;
  sim.record_samples = false;
  sim.record_actions = false;

  const SimResult result = run(sim);
  report.requests = result.summary.requests_generated;
  report.simulated_lq = result.summary.time_average_w;
  report.relative_error =
      std::abs(report.simulated_lq - report.analytic_lq) / report.analytic_lq;
  report.passed = report.relative_error <= args.tolerance;
  return report;
}

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  ValidationReport r;
  try {
    r = validate_fixed_pool(args);
  } catch (const UnstableSystem& e) {
    err << "unstable parameters: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const InvalidArgument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitConfigError;
  }
  out << "M/M/" << args.params.c << " lambda=" << args.params.lambda
      << " mu=" << args.params.mu << " rho=" << args.params.utilisation() << '\n'
      << "requests          " << r.requests << '\n'
      << "simulated Lq      " << std::setprecision(8) << r.simulated_lq << '\n'
      << "Erlang-C Lq       " << r.analytic_lq << '\n'
      << "relative error    " << r.relative_error << " (tolerance " << args.tolerance << ")\n"
      << (r.passed ? "PASS" : "FAIL") << '\n';
  return r.passed ? kExitOk : kExitValidationFailed;
}

SweepSpec parse_sweep_spec(const std::string& yaml_text, std::string_view origin) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string(origin) + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  SweepSpec spec;
  if (root.IsNull()) return spec;
  if (!root.IsMap()) throw ConfigError(std::string(origin) + ": top level must be a mapping");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    const auto line = std::string(origin) + ":" + std::to_string(kv.first.Mark().line + 1);
    if (key == "grid") {
      if (!kv.second.IsMap()) throw ConfigError(line + ": grid must map keys to value lists");
      for (const auto& axis : kv.second) {
        if (!axis.second.IsSequence()) {
          throw ConfigError(line + ": grid." + axis.first.as<std::string>() + " must be a list");
        }
        std::vector<std::string> values;
        for (const auto& v : axis.second) values.push_back(v.as<std::string>());
        spec.grid.emplace_back(axis.first.as<std::string>(), std::move(values));
      }
    } else if (key == "seeds") {
      if (!kv.second.IsSequence()) throw ConfigError(line + ": seeds must be a list");
      for (const auto& v : kv.second) {
        std::uint64_t s = 0;
        const auto text = v.as<std::string>();
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), s);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
          throw ConfigError(line + ": bad seed '" + text + "'");
        }
        spec.seeds.push_back(s);
      }
    } else {
      throw ConfigError(line + ": unknown key '" + key + "' (expected grid or seeds)");
    }
  }
  return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open sweep spec " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sweep_spec(buf.str(), path.string());
}

void add_grid_axis(SweepSpec& spec, std::string_view axis) {
  const auto eq = axis.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == axis.size()) {
    throw ConfigError("--grid '" + std::string(axis) + "' must look like key=v1,v2,...");
  }
  std::vector<std::string> values;
  std::string_view rest = axis.substr(eq + 1);
  while (true) {
    const auto comma = rest.find(',');
    values.emplace_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  spec.grid.emplace_back(std::string(axis.substr(0, eq)), std::move(values));
}

std::vector<SweepPoint> expand_sweep(const RunConfig& base, const SweepSpec& spec) {
  if (spec.grid.empty() && spec.seeds.empty()) {
    throw ConfigError("sweep grid is empty: give at least one grid axis or seed list");
  }
  for (const auto& [key, values] : spec.grid) {
    if (values.empty()) throw ConfigError("sweep axis '" + key + "' has no values");
    if (key == "seed" || key.starts_with("output.")) {
      throw ConfigError("sweep axis '" + key + "' is not a sweepable parameter");
    }
  }
  const std::vector<std::uint64_t> seeds =
      spec.seeds.empty() ? std::vector<std::uint64_t>{base.sim.seed} : spec.seeds;

  std::size_t grid_points = 1;
  for (const auto& axis : spec.grid) grid_points *= axis.second.size();

  std::vector<SweepPoint> points;
  points.reserve(grid_points * seeds.size());
  for (std::size_t g = 0; g < grid_points; ++g) {
    RunConfig cfg = base;
    std::vector<std::pair<std::string, std::string>> assignment;
    std::size_t rem = g;
    // Last axis varies fastest.
    std::vector<std::size_t> idx(spec.grid.size());
    for (std::size_t a = spec.grid.size(); a-- > 0;) {
      idx[a] = rem % spec.grid[a].second.size();
      rem /= spec.grid[a].second.size();
    }
    for (std::size_t a = 0; a < spec.grid.size(); ++a) {
      const auto& [key, values] = spec.grid[a];
      set_config_value(cfg, key, values[idx[a]]);
      assignment.emplace_back(key, values[idx[a]]);
    }
    for (const auto seed : seeds) {
      SweepPoint p{cfg, assignment};
      p.config.sim.seed = seed;
      p.assignment.emplace_back("seed", std::to_string(seed));
      char name[32];
      std::snprintf(name, sizeof(name), "run_%04zu", points.size());
      p.config.output.dir = base.output.dir / name;
      validate(p.config);
      points.push_back(std::move(p));
    }
  }
  return points;
}

int cmd_sweep(const ConfigSource& source, const SweepSpec& spec, Execution exec,
              std::ostream& out, std::ostream& err) {
  std::vector<SweepPoint> points;
  RunConfig base;
  try {
    base = resolve_config(source);
    points = expand_sweep(base, spec);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  std::vector<SimConfig> sims;
  sims.reserve(points.size());
  for (const auto& p : points) {
    SimConfig s = p.config.sim;
    s.record_samples = p.config.output.samples || p.config.output.smoothed;
    s.record_actions = p.config.output.actions;
    sims.push_back(std::move(s));
  }
  std::vector<SimResult> results;
  try {
    results = run_batch(sims, exec);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  std::ostringstream table;
  table << "run";
  for (const auto& [key, value] : points.front().assignment) table << ',' << key;
  table << ",time_average_w,time_average_p,max_w,requests_generated,requests_served,"
           "mean_response_time,creations,destructions\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    write_run_outputs(points[i].config, results[i]);
    const RunSummary& s = results[i].summary;
    table << points[i].config.output.dir.filename().string();
    for (const auto& [key, value] : points[i].assignment) table << ',' << value;
    table << ',' << format_double(s.time_average_w) << ',' << format_double(s.time_average_p)
          << ',' << s.max_w << ',' << s.requests_generated << ',' << s.requests_served << ','
          << format_double(s.mean_response_time) << ',' << s.creations << ','
          << s.destructions << '\n';
  }
  std::filesystem::create_directories(base.output.dir);
  write_file(base.output.dir / "sweep_summary.csv", table.str());
  out << points.size() << " runs written under " << base.output.dir.string() << '\n';
  return kExitOk;
}

}  // namespace edgescale
