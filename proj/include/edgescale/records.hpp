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
#include <variant>

#include "edgescale/queue_model.hpp"

namespace edgescale {

using WorkerId = std::uint64_t;

// Event that caused the controller to look at the queue.
enum class Trigger { Arrival, Pull };

const char* to_string(Trigger t);

// One controller observation.
struct SampleRecord {
  double time = 0.0;
  std::int64_t w = 0;
  double error = 0.0;
  std::int64_t p = 0;
  std::int64_t p_wanted = 0;
  double p_out = 0.0;
  Trigger trigger = Trigger::Arrival;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct NoOp {};
struct CreateWorkers {
  std::int64_t count = 0;
  WorkerId first_id = 0;  // new workers are first_id .. first_id + count - 1
};
struct DestroyWorker {
  WorkerId worker = 0;
};
struct Dispatch {
  RequestId request = 0;
  WorkerId worker = 0;
  double arrival_time = 0.0;
  double service_demand = 0.0;
};

using ScaleAction = std::variant<NoOp, CreateWorkers, DestroyWorker, Dispatch>;

// A scale action as it appears in the run trace.
struct ActionRecord {
  double time = 0.0;
  std::uint64_t event_index = 0;  // ordinal of the simulation event that produced it
  Trigger trigger = Trigger::Arrival;
  ScaleAction action;
  std::int64_t pool_after = 0;
  // Set for DestroyWorker: whether the kernel still had a service completion
  // outstanding for the destroyed worker. Must always be false.
  bool target_was_serving = false;
};

}  // namespace edgescale
