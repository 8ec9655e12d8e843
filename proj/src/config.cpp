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

#include "edgescale/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "edgescale/errors.hpp"

namespace edgescale {

namespace {

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || std::isnan(out)) {
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

template <typename Int>
Int to_int(std::string_view key, std::string_view v) {
  Int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(v) + "'");
}

std::string from_bool(bool b) { return b ? "true" : "false"; }

struct Field {
  std::function<void(RunConfig&, std::string_view key, std::string_view value)> set;
  std::function<std::string(const RunConfig&)> get;
};

// Getters are generic lambdas so one accessor serves both const and mutable use.
template <typename Getter>
Field number_field(Getter ref) {
  return {[ref](RunConfig& c, std::string_view k, std::string_view v) { ref(c) = to_double(k, v); },
          [ref](const RunConfig& c) { return format_double(ref(c)); }};
}

template <typename Int, typename Getter>
Field int_field(Getter ref) {
  return {[ref](RunConfig& c, std::string_view k, std::string_view v) { ref(c) = to_int<Int>(k, v); },
          [ref](const RunConfig& c) { return std::to_string(ref(c)); }};
}

template <typename Getter>
Field bool_field(Getter ref) {
  return {[ref](RunConfig& c, std::string_view k, std::string_view v) { ref(c) = to_bool(k, v); },
          [ref](const RunConfig& c) { return from_bool(ref(c)); }};
}

template <typename Getter>
Field distribution_kind(Getter ref) {
  return {[ref](RunConfig& c, std::string_view, std::string_view v) {
            ref(c).kind = parse_distribution_kind(v);
          },
          [ref](const RunConfig& c) { return to_string(ref(c).kind); }};
}

using FieldTable = std::vector<std::pair<std::string, Field>>;

const FieldTable& fields() {
  static const FieldTable table = [] {
    FieldTable t;
    t.emplace_back("seed", int_field<std::uint64_t>([](auto& c) -> auto& { return c.sim.seed; }));
    t.emplace_back("horizon", number_field([](auto& c) -> auto& { return c.sim.horizon; }));

    t.emplace_back("workload.kind",
                   Field{[](RunConfig& c, std::string_view, std::string_view v) {
                           c.sim.workload.kind = parse_workload_kind(std::string(v));
                         },
                         [](const RunConfig& c) { return to_string(c.sim.workload.kind); }});
    t.emplace_back("workload.mean_interarrival",
                   number_field([](auto& c) -> auto& { return c.sim.workload.mean_interarrival; }));
    t.emplace_back("workload.interval",
                   number_field([](auto& c) -> auto& { return c.sim.workload.interval; }));
    t.emplace_back("workload.trace",
                   Field{[](RunConfig& c, std::string_view, std::string_view v) {
                           c.sim.workload.trace = std::string(v);
                         },
                         [](const RunConfig& c) { return c.sim.workload.trace.string(); }});
    t.emplace_back("workload.limit",
                   int_field<std::uint64_t>([](auto& c) -> auto& { return c.sim.workload.limit; }));

    t.emplace_back("service_time.kind",
                   distribution_kind([](auto& c) -> auto& { return c.sim.service_time; }));
    t.emplace_back("service_time.mean",
                   number_field([](auto& c) -> auto& { return c.sim.service_time.mean; }));
    t.emplace_back("startup_delay.kind",
                   distribution_kind([](auto& c) -> auto& { return c.sim.startup_delay; }));
    t.emplace_back("startup_delay.mean",
                   number_field([](auto& c) -> auto& { return c.sim.startup_delay.mean; }));

    t.emplace_back("control.enabled", bool_field([](auto& c) -> auto& { return c.sim.control_enabled; }));
    t.emplace_back("control.kp", number_field([](auto& c) -> auto& { return c.sim.gains.kp; }));
    t.emplace_back("control.ki", number_field([](auto& c) -> auto& { return c.sim.gains.ki; }));
    t.emplace_back("control.kd", number_field([](auto& c) -> auto& { return c.sim.gains.kd; }));
    t.emplace_back("control.sign_convention",
                   Field{[](RunConfig& c, std::string_view k, std::string_view v) {
                           if (v == "w_minus_t") {
                             c.sim.gains.sign_convention = SignConvention::ErrorIsWMinusT;
                           } else if (v == "t_minus_w") {
                             c.sim.gains.sign_convention = SignConvention::ErrorIsTMinusW;
                           } else {
                             throw ConfigError(std::string(k) + ": expected w_minus_t or t_minus_w, got '" +
                                               std::string(v) + "'");
                           }
                         },
                         [](const RunConfig& c) {
                           return std::string(c.sim.gains.sign_convention == SignConvention::ErrorIsWMinusT
                                                  ? "w_minus_t"
                                                  : "t_minus_w");
                         }});
    t.emplace_back("control.integral_clamp",
                   number_field([](auto& c) -> auto& { return c.sim.gains.integral_clamp; }));
    t.emplace_back("control.target",
                   number_field([](auto& c) -> auto& { return c.sim.target.target_queue_length; }));
    t.emplace_back("control.p_min", int_field<std::int64_t>([](auto& c) -> auto& { return c.sim.target.p_min; }));
    t.emplace_back("control.p_max", int_field<std::int64_t>([](auto& c) -> auto& { return c.sim.target.p_max; }));
    t.emplace_back("control.initial_pool",
                   Field{[](RunConfig& c, std::string_view k, std::string_view v) {
                           if (v == "p_min") {
                             c.sim.initial_pool.reset();
                           } else {
                             c.sim.initial_pool = to_int<std::int64_t>(k, v);
                           }
                         },
                         [](const RunConfig& c) { return std::to_string(c.sim.resolved_initial_pool()); }});

    t.emplace_back("output.dir",
                   Field{[](RunConfig& c, std::string_view, std::string_view v) { c.output.dir = std::string(v); },
                         [](const RunConfig& c) { return c.output.dir.string(); }});
    t.emplace_back("output.samples", bool_field([](auto& c) -> auto& { return c.output.samples; }));
    t.emplace_back("output.smoothed", bool_field([](auto& c) -> auto& { return c.output.smoothed; }));
    t.emplace_back("output.actions", bool_field([](auto& c) -> auto& { return c.output.actions; }));
    t.emplace_back("output.window", int_field<std::size_t>([](auto& c) -> auto& { return c.output.window; }));
    return t;
  }();
  return table;
}

const Field* find_field(std::string_view key) {
  for (const auto& [name, field] : fields()) {
    if (name == key) return &field;
  }
  return nullptr;
}

std::string where(std::string_view origin, const YAML::Mark& mark) {
  return std::string(origin) + ":" + std::to_string(mark.line + 1);
}

void flatten(const YAML::Node& node, const std::string& prefix, std::string_view origin,
             RunConfig& cfg) {
  for (const auto& kv : node) {
    const std::string key = prefix.empty() ? kv.first.as<std::string>()
                                           : prefix + "." + kv.first.as<std::string>();
    const YAML::Node& value = kv.second;
    if (value.IsMap()) {
      flatten(value, key, origin, cfg);
      continue;
    }
    const Field* field = find_field(key);
    if (field == nullptr) {
      throw ConfigError(where(origin, kv.first.Mark()) + ": unknown key '" + key + "'");
    }
    if (!value.IsScalar()) {
      throw ConfigError(where(origin, value.Mark()) + ": '" + key + "' must be a scalar");
    }
    try {
      field->set(cfg, key, value.Scalar());
    } catch (const ConfigError& e) {
      throw ConfigError(where(origin, value.Mark()) + ": " + e.what());
    }
  }
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, field] : fields()) k.push_back(name);
    return k;
  }();
  return keys;
}

RunConfig parse_config(const std::string& yaml_text, std::string_view origin) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string(origin) + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  RunConfig cfg;
  if (root.IsNull()) return cfg;
  if (!root.IsMap()) {
    throw ConfigError(std::string(origin) + ": top level must be a mapping");
  }
  flatten(root, "", origin, cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value) {
  const Field* field = find_field(key);
  if (field == nullptr) throw ConfigError("unknown key '" + std::string(key) + "'");
  field->set(cfg, key, value);
}

std::string get_config_value(const RunConfig& cfg, std::string_view key) {
  const Field* field = find_field(key);
  if (field == nullptr) throw ConfigError("unknown key '" + std::string(key) + "'");
  return field->get(cfg);
}

void apply_override(RunConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError("override '" + std::string(assignment) + "' must look like key=value");
  }
  set_config_value(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

void validate(const RunConfig& cfg) {
  cfg.sim.validate();
  if (cfg.output.window == 0) throw ConfigError("output.window must be >= 1");
}

std::string to_yaml(const RunConfig& cfg) {
  // Group dotted keys under their section, preserving table order.
  YAML::Emitter out;
  out << YAML::BeginMap;
  std::string open_section;
  for (const auto& [name, field] : fields()) {
    const auto dot = name.find('.');
    const std::string section = dot == std::string::npos ? "" : name.substr(0, dot);
    const std::string leaf = dot == std::string::npos ? name : name.substr(dot + 1);
    if (section != open_section) {
      if (!open_section.empty()) out << YAML::EndMap;
      if (!section.empty()) out << YAML::Key << section << YAML::Value << YAML::BeginMap;
      open_section = section;
    }
    out << YAML::Key << leaf << YAML::Value << field.get(cfg);
  }
  if (!open_section.empty()) out << YAML::EndMap;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace edgescale
