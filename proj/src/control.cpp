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

#include "edgescale/control.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgescale/errors.hpp"

namespace edgescale {

void PidGains::validate() const {
  if (!std::isfinite(kp) || !std::isfinite(ki) || !std::isfinite(kd)) {
    throw InvalidArgument("PID gains must be finite");
  }
  if (!(integral_clamp >= 0.0)) {
    throw InvalidArgument("integral_clamp must be >= 0");
  }
}

void ControlTarget::validate() const {
  if (!std::isfinite(target_queue_length) || target_queue_length < 0.0) {
    throw InvalidArgument("target queue length must be finite and >= 0");
  }
  if (p_min < 0 || p_min > p_max) {
    throw InvalidArgument("pool bounds must satisfy 0 <= p_min <= p_max, got [" +
                          std::to_string(p_min) + ", " + std::to_string(p_max) + "]");
  }
}

double compute_error(double queue_length, const ControlTarget& target,
                     const PidGains& gains) {
  if (gains.sign_convention == SignConvention::ErrorIsWMinusT) {
    return queue_length - target.target_queue_length;
  }
  return target.target_queue_length - queue_length;
}

PidStep pid_step(const PidState& state, const PidGains& gains, double error,
                 double now) {
  if (!std::isfinite(error) || !std::isfinite(now)) {
    throw InvalidArgument("pid_step: error and timestamp must be finite");
  }
  if (state.prev_time && now < *state.prev_time) {
    throw InvalidArgument("pid_step: sample time went backwards");
  }

  const double dt = state.prev_time ? now - *state.prev_time : 0.0;

  PidStep out;
  const double clamp = gains.integral_clamp;
  out.state.integral = std::clamp(state.integral + error * dt, -clamp, clamp);
  if (state.prev_error && dt > 0.0) {
    out.derivative = (error - *state.prev_error) / dt;
  }
  // A derivative over a vanishing dt can overflow to inf; 0 * inf is NaN.
  const double d_term = gains.kd != 0.0 ? gains.kd * out.derivative : 0.0;
  out.p_out = gains.kp * error + gains.ki * out.state.integral + d_term;
  out.state.prev_error = error;
  out.state.prev_time = now;
  return out;
}

std::int64_t wanted_pool(std::int64_t p_current, double p_out,
                         const ControlTarget& target) {
  const double raw = static_cast<double>(p_current) + p_out;
  if (std::isnan(raw)) {
    throw InvalidArgument("wanted_pool: correction is NaN");
  }
  // Clamp before rounding so huge corrections cannot overflow llround.
  const double bounded = std::clamp(raw, static_cast<double>(target.p_min) - 1.0,
                                    static_cast<double>(target.p_max) + 1.0);
  const auto rounded = static_cast<std::int64_t>(std::llround(bounded));
  return std::clamp(rounded, target.p_min, target.p_max);
}

PidController::PidController(PidGains gains, ControlTarget target, bool enabled)
    : gains_(gains), target_(target), enabled_(enabled) {
  gains_.validate();
  target_.validate();
}

ControlDecision PidController::evaluate(double queue_length,
                                        std::int64_t p_current, double now) {
  ControlDecision d;
  d.error = compute_error(queue_length, target_, gains_);
  if (!enabled_) {
    d.p_wanted = p_current;
    return d;
  }
  PidStep step = pid_step(state_, gains_, d.error, now);
  state_ = step.state;
  d.p_out = step.p_out;
  d.p_wanted = wanted_pool(p_current, step.p_out, target_);
  return d;
}

}  // namespace edgescale
