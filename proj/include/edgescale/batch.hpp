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

#include <span>
#include <vector>

#include "edgescale/sim_kernel.hpp"

namespace edgescale {

enum class Execution { Serial, Parallel };

// Runs independent simulations. The serial path is the reference; the
// parallel path distributes configs over OpenMP threads and must return the
// same results in the same order. If any run throws, the exception of the
// lowest-index failing run is rethrown after all runs finish.
std::vector<SimResult> run_batch(std::span<const SimConfig> configs, Execution exec);

// Same as run_batch but keeps only the summaries.
std::vector<RunSummary> run_batch_summaries(std::span<const SimConfig> configs,
                                            Execution exec);

int batch_threads();

}  // namespace edgescale
