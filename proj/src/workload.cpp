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

#include "edgescale/workload.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "edgescale/errors.hpp"

namespace edgescale {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void row_error(std::size_t line_no, const std::string& what) {
  throw ConfigError("trace line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

void WorkloadDescriptor::validate() const {
  switch (kind) {
    case Kind::Poisson:
      if (!(mean_interarrival > 0.0) || !std::isfinite(mean_interarrival)) {
        throw ConfigError("workload.mean_interarrival must be finite and > 0");
      }
      break;
    case Kind::Deterministic:
      if (!(interval > 0.0) || !std::isfinite(interval)) {
        throw ConfigError("workload.interval must be finite and > 0");
      }
      break;
    case Kind::Trace:
      if (trace.empty()) throw ConfigError("workload.trace must name a CSV file");
      break;
  }
}

std::string to_string(WorkloadDescriptor::Kind kind) {
  switch (kind) {
    case WorkloadDescriptor::Kind::Poisson: return "poisson";
    case WorkloadDescriptor::Kind::Deterministic: return "deterministic";
    case WorkloadDescriptor::Kind::Trace: return "trace";
  }
  return "poisson";
}

WorkloadDescriptor::Kind parse_workload_kind(const std::string& text) {
  if (text == "poisson") return WorkloadDescriptor::Kind::Poisson;
  if (text == "deterministic") return WorkloadDescriptor::Kind::Deterministic;
  if (text == "trace") return WorkloadDescriptor::Kind::Trace;
  throw ConfigError("unknown workload kind '" + text +
                    "' (expected poisson, deterministic or trace)");
}

std::vector<TraceRow> parse_trace_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_demand = false;
  bool header_seen = false;
  std::vector<TraceRow> rows;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto fields = split(view, ',');
    if (!header_seen) {
      header_seen = true;
      if (fields.size() == 1 && trim(fields[0]) == "time_s") continue;
      if (fields.size() == 2 && trim(fields[0]) == "time_s" &&
          trim(fields[1]) == "service_demand_s") {
        have_demand = true;
        continue;
      }
      row_error(line_no, "expected header 'time_s' or 'time_s,service_demand_s'");
    }
    if (fields.size() != (have_demand ? 2u : 1u)) {
      row_error(line_no, "expected " + std::to_string(have_demand ? 2 : 1) +
                             " field(s), got " + std::to_string(fields.size()));
    }
    TraceRow row;
    const auto t = parse_double(fields[0]);
    if (!t || *t < 0.0) row_error(line_no, "invalid time '" + std::string(fields[0]) + "'");
    row.time = *t;
    if (have_demand) {
      const auto d = parse_double(fields[1]);
      if (!d || *d <= 0.0) {
        row_error(line_no, "invalid service demand '" + std::string(fields[1]) + "'");
      }
      row.service_demand = *d;
    }
    if (!rows.empty() && row.time <= rows.back().time) {
      row_error(line_no, "arrival times must strictly increase");
    }
    rows.push_back(row);
  }
  if (!header_seen) throw ConfigError("trace is empty: missing header");
  return rows;
}

std::vector<TraceRow> read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open trace file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trace_csv(buf.str());
}

Workload::Workload(WorkloadDescriptor descriptor)
    : descriptor_(std::move(descriptor)) {
  descriptor_.validate();
  if (descriptor_.kind == WorkloadDescriptor::Kind::Trace) {
    rows_ = read_trace_csv(descriptor_.trace);
  }
}

Workload::Workload(WorkloadDescriptor descriptor, std::vector<TraceRow> rows)
    : descriptor_(std::move(descriptor)), rows_(std::move(rows)) {}

std::optional<Request> Workload::next_arrival(Rng& rng) {
  if (descriptor_.limit != 0 && emitted_ >= descriptor_.limit) return std::nullopt;

  Request r;
  switch (descriptor_.kind) {
    case WorkloadDescriptor::Kind::Poisson:
      {
        const double next = clock_ + sample_exponential(rng, descriptor_.mean_interarrival);
        // A gap below the clock's ulp would otherwise collapse two arrivals.
        clock_ = next > clock_ ? next : std::nextafter(clock_, INFINITY);
      }
      r.arrival_time = clock_;
      break;
    case WorkloadDescriptor::Kind::Deterministic:
      // Multiplying avoids accumulated rounding drift over long runs.
      r.arrival_time = descriptor_.interval * static_cast<double>(emitted_ + 1);
      break;
    case WorkloadDescriptor::Kind::Trace:
      if (emitted_ >= rows_.size()) return std::nullopt;
      r.arrival_time = rows_[emitted_].time;
      r.service_demand = rows_[emitted_].service_demand;
      break;
  }
  ++emitted_;
  r.id = emitted_;
  return r;
}

}  // namespace edgescale
