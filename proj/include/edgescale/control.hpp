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
#include <optional>

namespace edgescale {

// Which way the error signal is oriented. With positive gains, W - T makes a
// queue above target produce a positive (scale-up) correction. T - W together
// with negative gains describes the same loop.
enum class SignConvention { ErrorIsWMinusT, ErrorIsTMinusW };

struct PidGains {
  double kp = 0.9;   // dimensionless
  double ki = 0.0;   // 1/s
  double kd = 0.2;   // s
  SignConvention sign_convention = SignConvention::ErrorIsWMinusT;
  double integral_clamp = 1000.0;  // bound on |integral|, request*seconds

  // Throws InvalidArgument on non-finite gains or a negative clamp.
  void validate() const;
};

struct PidState {
  double integral = 0.0;
  std::optional<double> prev_error;
  std::optional<double> prev_time;
};

struct ControlTarget {
  double target_queue_length = 25.0;
  std::int64_t p_min = 1;
  std::int64_t p_max = 100;

  void validate() const;
};

struct PidStep {
  PidState state;
  double p_out = 0.0;
  double derivative = 0.0;
};

double compute_error(double queue_length, const ControlTarget& target,
                     const PidGains& gains);

// One update of the discretised PID law over an irregular sampling grid.
// The integral uses the rectangle rule error*dt and is clamped to
// +-gains.integral_clamp. The derivative is the backward difference
// (error - prev_error) / dt and is zero on the first sample or when dt == 0.
PidStep pid_step(const PidState& state, const PidGains& gains, double error,
                 double now);

// clamp(round_half_away_from_zero(p_current + p_out), p_min, p_max)
std::int64_t wanted_pool(std::int64_t p_current, double p_out,
                         const ControlTarget& target);

struct ControlDecision {
  double error = 0.0;
  double p_out = 0.0;
  std::int64_t p_wanted = 0;
};

// Stateful wrapper pairing gains and target with the PID memory. When
// disabled it never changes the pool: p_wanted always equals p_current.
class PidController {
 public:
  PidController(PidGains gains, ControlTarget target, bool enabled = true);

  ControlDecision evaluate(double queue_length, std::int64_t p_current,
                           double now);

  const PidGains& gains() const { return gains_; }
  const ControlTarget& target() const { return target_; }
  const PidState& state() const { return state_; }
  bool enabled() const { return enabled_; }

 private:
  PidGains gains_;
  ControlTarget target_;
  PidState state_;
  bool enabled_;
};

}  // namespace edgescale
