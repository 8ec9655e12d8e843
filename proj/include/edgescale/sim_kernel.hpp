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
#include <optional>
#include <variant>
#include <vector>

#include "edgescale/control.hpp"
#include "edgescale/metrics.hpp"
#include "edgescale/random.hpp"
#include "edgescale/records.hpp"
#include "edgescale/workload.hpp"

namespace edgescale {

struct SimConfig {
  std::uint64_t seed = 1;
  double horizon = 3600.0;
  Distribution startup_delay{Distribution::Kind::Constant, 1.0};
  Distribution service_time{Distribution::Kind::Exponential, 5.0};
  WorkloadDescriptor workload;
  // Preloaded trace rows; used instead of reading workload.trace when set.
  std::optional<std::vector<TraceRow>> trace_rows;
  PidGains gains;
  ControlTarget target;
  bool control_enabled = true;
  // Workers deployed (idle) at time 0; defaults to p_min.
  std::optional<std::int64_t> initial_pool;
  // Trace retention; long validation runs switch these off.
  bool record_samples = true;
  bool record_actions = true;
  // Keep every processed event in SimResult::events.
  bool record_events = false;

  // Throws ConfigError describing the first invalid field.
  void validate() const;
  std::int64_t resolved_initial_pool() const {
    return initial_pool.value_or(target.p_min);
  }
};

enum class EventKind { Arrival, StartupComplete, ServiceComplete };

struct Event {
  double time = 0.0;
  std::uint64_t seq = 0;
  double scheduled_at = 0.0;
  EventKind kind = EventKind::Arrival;
  Request request;          // Arrival, ServiceComplete
  WorkerId worker = 0;      // StartupComplete, ServiceComplete
};

struct SimResult {
  std::vector<SampleRecord> samples;
  std::vector<ActionRecord> actions;
  std::vector<Event> events;  // only with SimConfig::record_events
  RunSummary summary;
};

// Runs the event loop until the event set is empty or the next event lies
// past the horizon. Equal configs give bit-identical results.
SimResult run(const SimConfig& cfg);

}  // namespace edgescale
