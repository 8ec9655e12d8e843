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

#include "edgescale/batch.hpp"

#include <exception>

#include <omp.h>

namespace edgescale {

namespace {

template <typename Out, typename Fn>
std::vector<Out> run_each(std::span<const SimConfig> configs, Execution exec, Fn fn) {
  std::vector<Out> out(configs.size());
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < configs.size(); ++i) out[i] = fn(configs[i]);
    return out;
  }

  std::vector<std::exception_ptr> errors(configs.size());
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(configs[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

std::vector<SimResult> run_batch(std::span<const SimConfig> configs, Execution exec) {
  return run_each<SimResult>(configs, exec, [](const SimConfig& c) { return run(c); });
}

std::vector<RunSummary> run_batch_summaries(std::span<const SimConfig> configs,
                                            Execution exec) {
  return run_each<RunSummary>(configs, exec, [](const SimConfig& c) {
    SimConfig lean = c;
    lean.record_samples = false;
    lean.record_actions = false;
    lean.record_events = false;
    return run(lean).summary;
  });
}

int batch_threads() { return omp_get_max_threads(); }

}  // namespace edgescale
