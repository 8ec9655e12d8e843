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

#include "edgescale/metrics.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "edgescale/errors.hpp"

namespace edgescale {

bool RunSummary::requests_conserved() const {
  return requests_generated == requests_served + requests_in_queue + requests_in_service;
}

bool RunSummary::workers_conserved() const {
  return static_cast<std::int64_t>(creations) - static_cast<std::int64_t>(destructions) ==
         final_p - initial_p;
}

void TimeWeightedAverage::advance(double now) {
  if (now < last_time_) {
    throw InvalidArgument("TimeWeightedAverage: time went backwards");
  }
  integral_ += value_ * (now - last_time_);
  last_time_ = now;
}

double TimeWeightedAverage::mean() const {
  const double span = last_time_ - start_;
  return span > 0.0 ? integral_ / span : value_;
}

std::vector<double> moving_average(std::span<const double> values,
                                   std::size_t window) {
  if (window == 0) throw InvalidArgument("moving_average: window must be >= 1");
  std::vector<double> out;
  out.reserve(values.size());
  // Each window is summed directly rather than with a running sum, so every
  // output is the plain mean of its inputs regardless of series length.
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t first = i + 1 >= window ? i + 1 - window : 0;
    double sum = 0.0;
    for (std::size_t j = first; j <= i; ++j) sum += values[j];
    out.push_back(sum / static_cast<double>(i + 1 - first));
  }
  return out;
}

double time_average(std::span<const TimedValue> series, double horizon) {
  if (series.empty()) throw InvalidArgument("time_average: empty series");
  if (horizon <= 0.0) return series.back().value;
  double area = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double begin = std::min(series[i].time, horizon);
    const double end = i + 1 < series.size() ? std::min(series[i + 1].time, horizon) : horizon;
    if (end > begin) area += series[i].value * (end - begin);
  }
  return area / horizon;
}

std::vector<SmoothedSample> smooth_samples(std::span<const SampleRecord> samples,
                                           std::size_t window) {
  std::vector<double> w, p;
  w.reserve(samples.size());
  p.reserve(samples.size());
  for (const auto& s : samples) {
    w.push_back(static_cast<double>(s.w));
    p.push_back(static_cast<double>(s.p));
  }
  const auto w_ma = moving_average(w, window);
  const auto p_ma = moving_average(p, window);
  std::vector<SmoothedSample> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out[i] = {samples[i].time, w_ma[i], p_ma[i]};
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_samples_csv(std::ostream& out, std::span<const SampleRecord> samples) {
  out << kSamplesCsvHeader << '\n';
  for (const auto& s : samples) {
    out << format_double(s.time) << ',' << s.w << ',' << format_double(s.error) << ','
        << s.p << ',' << s.p_wanted << ',' << format_double(s.p_out) << ','
        << to_string(s.trigger) << '\n';
  }
}

namespace {

template <typename T>
T parse_field(std::string_view field, std::size_t line_no, const char* column) {
  T v{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ConfigError("samples line " + std::to_string(line_no) + ": bad value '" +
                      std::string(field) + "' in column " + column);
  }
  return v;
}

}  // namespace

std::vector<SampleRecord> parse_samples_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kSamplesCsvHeader) {
    throw ConfigError("samples line 1: header must be '" + std::string(kSamplesCsvHeader) + "'");
  }
  static constexpr const char* kColumns[] = {"time_s", "w", "error", "p",
                                             "p_wanted", "p_out", "trigger"};
  std::vector<SampleRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      f.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    f.push_back(rest);
    if (f.size() != 7) {
      throw ConfigError("samples line " + std::to_string(line_no) + ": expected 7 fields");
    }
    SampleRecord s;
    s.time = parse_field<double>(f[0], line_no, kColumns[0]);
    s.w = parse_field<std::int64_t>(f[1], line_no, kColumns[1]);
    s.error = parse_field<double>(f[2], line_no, kColumns[2]);
    s.p = parse_field<std::int64_t>(f[3], line_no, kColumns[3]);
    s.p_wanted = parse_field<std::int64_t>(f[4], line_no, kColumns[4]);
    s.p_out = parse_field<double>(f[5], line_no, kColumns[5]);
    if (f[6] == "arrival") {
      s.trigger = Trigger::Arrival;
    } else if (f[6] == "pull") {
      s.trigger = Trigger::Pull;
    } else {
      throw ConfigError("samples line " + std::to_string(line_no) + ": bad trigger '" +
                        std::string(f[6]) + "'");
    }
    out.push_back(s);
  }
  return out;
}

void write_smoothed_csv(std::ostream& out, std::span<const SmoothedSample> smoothed) {
  out << kSmoothedCsvHeader << '\n';
  for (const auto& s : smoothed) {
    out << format_double(s.time) << ',' << format_double(s.w) << ','
        << format_double(s.p) << '\n';
  }
}

void write_action_log(std::ostream& out, std::span<const ActionRecord> actions) {
  for (const auto& a : actions) {
    if (std::holds_alternative<NoOp>(a.action)) continue;
    out << format_double(a.time) << ' ' << a.event_index << ' ' << to_string(a.trigger) << ' ';
    std::visit(
        [&out](const auto& act) {
          using T = std::decay_t<decltype(act)>;
          if constexpr (std::is_same_v<T, CreateWorkers>) {
            out << "create count=" << act.count << " first_worker=" << act.first_id;
          } else if constexpr (std::is_same_v<T, DestroyWorker>) {
            out << "destroy worker=" << act.worker;
          } else if constexpr (std::is_same_v<T, Dispatch>) {
            out << "dispatch request=" << act.request << " worker=" << act.worker
                << " demand=" << format_double(act.service_demand);
          }
        },
        a.action);
    out << " pool=" << a.pool_after << '\n';
  }
}

std::string summary_to_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["time_average_w"] = s.time_average_w;
  j["time_average_p"] = s.time_average_p;
  j["max_w"] = s.max_w;
  j["requests_generated"] = s.requests_generated;
  j["requests_served"] = s.requests_served;
  j["requests_in_queue"] = s.requests_in_queue;
  j["requests_in_service"] = s.requests_in_service;
  j["mean_response_time"] = s.mean_response_time;
  j["creations"] = s.creations;
  j["destructions"] = s.destructions;
  j["initial_p"] = s.initial_p;
  j["final_p"] = s.final_p;
  j["end_time"] = s.end_time;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  j["rng"] = s.rng;
  return j.dump(2) + "\n";
}

}  // namespace edgescale
