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

#include <gtest/gtest.h>

#include "edgescale/errors.hpp"

namespace edgescale {
namespace {

TEST(Config, DefaultsMatchReferenceExperiment) {
  const RunConfig c = parse_config("");
  EXPECT_EQ(c.sim.workload.kind, WorkloadDescriptor::Kind::Poisson);
  EXPECT_EQ(c.sim.workload.mean_interarrival, 1.0);
  EXPECT_EQ(c.sim.service_time.kind, Distribution::Kind::Exponential);
  EXPECT_EQ(c.sim.service_time.mean, 5.0);
  EXPECT_EQ(c.sim.target.target_queue_length, 25.0);
  EXPECT_EQ(c.sim.gains.kp, 0.9);
  EXPECT_EQ(c.sim.gains.ki, 0.0);
  EXPECT_EQ(c.sim.gains.kd, 0.2);
  EXPECT_EQ(c.sim.gains.sign_convention, SignConvention::ErrorIsWMinusT);
  EXPECT_EQ(c.sim.gains.integral_clamp, 1000.0);
  EXPECT_EQ(c.sim.target.p_min, 1);
  EXPECT_EQ(c.sim.target.p_max, 100);
  EXPECT_EQ(c.sim.startup_delay.kind, Distribution::Kind::Constant);
  EXPECT_EQ(c.sim.startup_delay.mean, 1.0);
  EXPECT_EQ(c.output.window, 10u);
  EXPECT_NO_THROW(validate(c));
}

TEST(Config, ParsesNestedKeys) {
  const RunConfig c = parse_config(R"(
# comment
seed: 77
horizon: 120.5
control:
  kp: 1.5
  sign_convention: t_minus_w
  initial_pool: 4
workload:
  kind: deterministic
  interval: 0.25
startup_delay:
  kind: exponential
  mean: 3
output:
  actions: false
)");
  EXPECT_EQ(c.sim.seed, 77u);
  EXPECT_EQ(c.sim.horizon, 120.5);
  EXPECT_EQ(c.sim.gains.kp, 1.5);
  EXPECT_EQ(c.sim.gains.sign_convention, SignConvention::ErrorIsTMinusW);
  EXPECT_EQ(c.sim.resolved_initial_pool(), 4);
  EXPECT_EQ(c.sim.workload.kind, WorkloadDescriptor::Kind::Deterministic);
  EXPECT_EQ(c.sim.startup_delay.kind, Distribution::Kind::Exponential);
  EXPECT_FALSE(c.output.actions);
}

void expect_config_error(const std::string& yaml, const std::string& needle) {
  try {
    parse_config(yaml, "run.yaml");
    FAIL() << "accepted: " << yaml;
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(Config, ErrorsCarryLineAndField) {
  expect_config_error("seed: 1\ncontrol:\n  kq: 2\n", "run.yaml:3: unknown key 'control.kq'");
  expect_config_error("horizon: soon\n", "run.yaml:1");
  expect_config_error("horizon: soon\n", "horizon");
  expect_config_error("control:\n  enabled: maybe\n", "run.yaml:2");
  expect_config_error("seed: [1, 2]\n", "must be a scalar");
  expect_config_error("- a\n- b\n", "top level");
  expect_config_error("control: {kp: 1\n", "run.yaml");
  expect_config_error("workload:\n  kind: bursty\n", "bursty");
}

TEST(Config, ValidationRejectsBadValues) {
  RunConfig c;
  c.sim.horizon = 0.0;
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.output.window = 0;
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.sim.target.p_min = 10;
  c.sim.target.p_max = 5;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Config, OverridesUseDottedPaths) {
  RunConfig c;
  apply_override(c, "control.target=12");
  apply_override(c, "output.dir=/tmp/x");
  EXPECT_EQ(c.sim.target.target_queue_length, 12.0);
  EXPECT_EQ(c.output.dir, "/tmp/x");
  EXPECT_THROW(apply_override(c, "control.target"), ConfigError);
  EXPECT_THROW(apply_override(c, "nope=1"), ConfigError);
  EXPECT_THROW(apply_override(c, "control.p_min=1.5"), ConfigError);
  EXPECT_EQ(get_config_value(c, "control.target"), "12");
}

TEST(Config, EchoRoundTrips) {
  RunConfig c;
  c.sim.seed = 123456789012345ull;
  c.sim.gains.kd = 0.1 + 0.2;  // not exactly representable in short decimal
  c.sim.workload.kind = WorkloadDescriptor::Kind::Trace;
  c.sim.workload.trace = "traces/day one.csv";
  c.sim.initial_pool = 3;
  c.output.smoothed = false;
  const std::string yaml = to_yaml(c);
  const RunConfig back = parse_config(yaml);
  EXPECT_EQ(to_yaml(back), yaml);
  EXPECT_EQ(back.sim.gains.kd, c.sim.gains.kd);
  EXPECT_EQ(back.sim.seed, c.sim.seed);
  EXPECT_EQ(back.sim.workload.trace, c.sim.workload.trace);
  for (const auto& key : config_keys()) {
    EXPECT_EQ(get_config_value(back, key), get_config_value(c, key)) << key;
  }
}

}  // namespace
}  // namespace edgescale
