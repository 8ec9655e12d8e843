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

// Test-only reference: stationary distribution of the M/M/c birth-death
// chain, solved by direct recursion and truncated once the tail is
// negligible. Shares no code with the closed-form Erlang C path.

#include <cstdint>
#include <vector>

namespace edgescale::testing {

struct BirthDeathResult {
  double p_wait = 0.0;  // P(N >= c)
  double lq = 0.0;      // E[max(N - c, 0)]
  std::size_t states = 0;
};

inline BirthDeathResult solve_mmc_birth_death(double lambda, double mu, std::int64_t c,
                                              double tail_tolerance = 1e-14) {
  // pi_{n+1} = pi_n * lambda / (min(n+1, c) * mu), unnormalised with pi_0 = 1.
  // Stops once the newest term is negligible against the waiting mass
  // (states n >= c), which is what both outputs are built from.
  std::vector<double> pi{1.0};
  double waiting = 0.0;
  while (true) {
    const auto n = static_cast<std::int64_t>(pi.size());
    const double servers = static_cast<double>(n < c ? n : c);
    const double next = pi.back() * lambda / (servers * mu);
    pi.push_back(next);
    if (n >= c) waiting += next;
    if (n > c && next < tail_tolerance * waiting) break;
  }
  double total = 0.0;
  for (double p : pi) total += p;
  BirthDeathResult r;
  r.states = pi.size();
  for (std::size_t n = 0; n < pi.size(); ++n) {
    const double p = pi[n] / total;
    if (static_cast<std::int64_t>(n) >= c) {
      r.p_wait += p;
      r.lq += static_cast<double>(static_cast<std::int64_t>(n) - c) * p;
    }
  }
  return r;
}

}  // namespace edgescale::testing
