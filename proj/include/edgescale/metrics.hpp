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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "edgescale/records.hpp"

namespace edgescale {

struct RunSummary {
  double time_average_w = 0.0;
  double time_average_p = 0.0;
  std::int64_t max_w = 0;
  std::uint64_t requests_generated = 0;
  std::uint64_t requests_served = 0;
  std::uint64_t requests_in_queue = 0;
  std::uint64_t requests_in_service = 0;
  double mean_response_time = 0.0;
  std::uint64_t creations = 0;
  std::uint64_t destructions = 0;
  std::int64_t initial_p = 0;
  std::int64_t final_p = 0;
  double end_time = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string rng;

  // generated == served + in_queue + in_service
  bool requests_conserved() const;
  // creations - destructions == final_p - initial_p
  bool workers_conserved() const;
};

// Exact time integral of a piecewise-constant signal that changes at event
// instants.
class TimeWeightedAverage {
 public:
  explicit TimeWeightedAverage(double start_time = 0.0, double value = 0.0)
      : start_(start_time), last_time_(start_time), value_(value) {}

  void advance(double now);
  void set(double value) { value_ = value; }
  double value() const { return value_; }
  double integral() const { return integral_; }
  // Mean over [start, last advanced time]; the current value if no time elapsed.
  double mean() const;

 private:
  double start_;
  double last_time_;
  double value_;
  double integral_ = 0.0;
};

// Element i is the mean of the last min(i + 1, window) values.
// Throws InvalidArgument when window == 0.
std::vector<double> moving_average(std::span<const double> values,
                                   std::size_t window);

struct TimedValue {
  double time = 0.0;
  double value = 0.0;
};

// Left-closed piecewise-constant integral over [0, horizon] divided by
// horizon: sample i holds on [t_i, t_{i+1}), the last one until horizon, and
// the signal counts as 0 before the first sample. A zero horizon returns the
// last value. Throws InvalidArgument on an empty series.
double time_average(std::span<const TimedValue> series, double horizon);

struct SmoothedSample {
  double time = 0.0;
  double w = 0.0;
  double p = 0.0;
};

// Moving average applied to both the queue and pool series, timestamps kept.
std::vector<SmoothedSample> smooth_samples(std::span<const SampleRecord> samples,
                                           std::size_t window);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

inline constexpr const char* kSamplesCsvHeader = "time_s,w,error,p,p_wanted,p_out,trigger";
inline constexpr const char* kSmoothedCsvHeader = "time_s,w_ma,p_ma";

void write_samples_csv(std::ostream& out, std::span<const SampleRecord> samples);
// Throws ConfigError naming the line on malformed input or a header mismatch.
std::vector<SampleRecord> parse_samples_csv(const std::string& text);
void write_smoothed_csv(std::ostream& out, std::span<const SmoothedSample> smoothed);

void write_action_log(std::ostream& out, std::span<const ActionRecord> actions);

std::string summary_to_json(const RunSummary& summary);

}  // namespace edgescale
