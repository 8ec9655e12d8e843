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

namespace edgescale {

// Steady-state M/M/c quantities (Poisson arrivals, exponential service,
// c identical servers, infinite FIFO buffer).
struct MmcParams {
  double lambda = 1.0;  // arrivals per second
  double mu = 0.2;      // services per second per worker
  std::int64_t c = 1;

  double offered_load() const { return lambda / mu; }
  double utilisation() const { return lambda / (static_cast<double>(c) * mu); }
  bool stable() const { return utilisation() < 1.0; }
};

// Probability that an arrival has to wait (Erlang C). Factorials are handled
// in log space. Throws InvalidArgument on bad parameters and UnstableSystem
// when utilisation >= 1.
double erlang_c(const MmcParams& params);

// Lq = C(c, a) * rho / (1 - rho)
double mean_queue_length(const MmcParams& params);

// Mean time in queue, Lq / lambda.
double mean_waiting_time(const MmcParams& params);

}  // namespace edgescale
