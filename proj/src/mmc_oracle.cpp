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

#include "edgescale/mmc_oracle.hpp"

#include <cmath>
#include <string>

#include "edgescale/errors.hpp"

namespace edgescale {

namespace {

void check(const MmcParams& p) {
  if (!(p.lambda > 0.0) || !(p.mu > 0.0) || !std::isfinite(p.lambda) ||
      !std::isfinite(p.mu)) {
    throw InvalidArgument("M/M/c: lambda and mu must be finite and > 0");
  }
  if (p.c < 1) throw InvalidArgument("M/M/c: c must be >= 1");
  if (!p.stable()) {
    throw UnstableSystem("M/M/c: utilisation " + std::to_string(p.utilisation()) +
                         " >= 1, no steady state");
  }
}

}  // namespace

double erlang_c(const MmcParams& p) {
  check(p);
  const double a = p.offered_load();
  const double rho = p.utilisation();
  const double log_a = std::log(a);

  // log of the waiting term a^c / (c! (1 - rho)), and each a^k / k! relative
  // to it, so the sum never overflows for large c.
  const double log_tail = static_cast<double>(p.c) * log_a -
                          std::lgamma(static_cast<double>(p.c) + 1.0) -
                          std::log1p(-rho);
  double rel_sum = 0.0;
  for (std::int64_t k = 0; k < p.c; ++k) {
    const double kd = static_cast<double>(k);
    rel_sum += std::exp(kd * log_a - std::lgamma(kd + 1.0) - log_tail);
  }
  return 1.0 / (1.0 + rel_sum);
}

double mean_queue_length(const MmcParams& p) {
  const double rho = p.utilisation();
  return erlang_c(p) * rho / (1.0 - rho);
}

double mean_waiting_time(const MmcParams& p) {
  return mean_queue_length(p) / p.lambda;
}

}  // namespace edgescale
