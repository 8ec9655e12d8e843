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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "edgescale/queue_model.hpp"
#include "edgescale/random.hpp"

namespace edgescale {

struct WorkloadDescriptor {
  enum class Kind { Poisson, Deterministic, Trace };
  Kind kind = Kind::Poisson;
  double mean_interarrival = 1.0;  // Poisson
  double interval = 1.0;           // Deterministic
  std::filesystem::path trace;     // Trace
  std::uint64_t limit = 0;         // max requests, 0 = bounded by the horizon

  void validate() const;
};

std::string to_string(WorkloadDescriptor::Kind kind);
WorkloadDescriptor::Kind parse_workload_kind(const std::string& text);

struct TraceRow {
  double time = 0.0;
  std::optional<double> service_demand;
};

// Reads a trace CSV with header `time_s` or `time_s,service_demand_s`.
// Rejects malformed rows, non-increasing times and non-positive demands
// with the offending line number.
std::vector<TraceRow> read_trace_csv(const std::filesystem::path& path);
std::vector<TraceRow> parse_trace_csv(const std::string& text);

// Sequential arrival generator. Arrival times strictly increase and request
// IDs run 1, 2, 3, ... without gaps.
class Workload {
 public:
  explicit Workload(WorkloadDescriptor descriptor);
  Workload(WorkloadDescriptor descriptor, std::vector<TraceRow> rows);

  // Returns std::nullopt once the limit or the trace end is reached.
  std::optional<Request> next_arrival(Rng& rng);

  std::uint64_t emitted() const { return emitted_; }

 private:
  WorkloadDescriptor descriptor_;
  std::vector<TraceRow> rows_;
  double clock_ = 0.0;
  std::uint64_t emitted_ = 0;
};

}  // namespace edgescale
