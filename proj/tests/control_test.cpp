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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "edgescale/errors.hpp"

namespace edgescale {
namespace {

PidGains reference_gains() {
  PidGains g;
  g.kp = 0.9;
  g.ki = 0.0;
  g.kd = 0.2;
  return g;
}

TEST(ComputeError, SetpointMet) {
  ControlTarget t;
  EXPECT_EQ(compute_error(25, t, reference_gains()), 0.0);
}

TEST(ComputeError, Orientation) {
  ControlTarget t;
  PidGains g = reference_gains();
  EXPECT_EQ(compute_error(35, t, g), 10.0);
  EXPECT_EQ(compute_error(0, t, g), -25.0);
  g.sign_convention = SignConvention::ErrorIsTMinusW;
  EXPECT_EQ(compute_error(35, t, g), -10.0);
}

TEST(PidStep, FirstSampleZeroError) {
  const PidStep s = pid_step(PidState{}, reference_gains(), 0.0, 3.0);
  EXPECT_EQ(s.p_out, 0.0);
  EXPECT_EQ(s.state.prev_time, 3.0);
}

TEST(PidStep, ConstantErrorHasNoDerivative) {
  PidState st;
  st.prev_error = 10.0;
  st.prev_time = 10.0;
  const PidStep s = pid_step(st, reference_gains(), 10.0, 11.0);
  EXPECT_NEAR(s.p_out, 9.0, 1e-12);
}

TEST(PidStep, StepInErrorOverOneSecond) {
  PidState st;
  st.prev_error = 0.0;
  st.prev_time = 10.0;
  const PidStep s = pid_step(st, reference_gains(), 10.0, 11.0);
  EXPECT_NEAR(s.p_out, 11.0, 1e-12);
  EXPECT_NEAR(s.derivative, 10.0, 1e-12);
}

TEST(PidStep, ZeroDtGivesZeroDerivative) {
  PidState st;
  st.prev_error = 0.0;
  st.prev_time = 5.0;
  const PidStep s = pid_step(st, reference_gains(), 4.0, 5.0);
  EXPECT_EQ(s.derivative, 0.0);
  EXPECT_NEAR(s.p_out, 3.6, 1e-12);
}

TEST(PidStep, RectangularIntegral) {
  PidGains g{0.0, 0.5, 0.0, SignConvention::ErrorIsWMinusT, 1000.0};
  PidState st;
  st = pid_step(st, g, 2.0, 0.0).state;  // dt = 0
  EXPECT_EQ(st.integral, 0.0);
  const PidStep s = pid_step(st, g, 4.0, 2.5);  // += 4 * 2.5
  EXPECT_NEAR(s.state.integral, 10.0, 1e-12);
  EXPECT_NEAR(s.p_out, 5.0, 1e-12);
}

TEST(PidStep, RejectsBadInput) {
  EXPECT_THROW(pid_step(PidState{}, reference_gains(), NAN, 0.0), InvalidArgument);
  EXPECT_THROW(pid_step(PidState{}, reference_gains(), 1.0, INFINITY), InvalidArgument);
  PidState st;
  st.prev_time = 5.0;
  st.prev_error = 0.0;
  EXPECT_THROW(pid_step(st, reference_gains(), 1.0, 4.0), InvalidArgument);
}

TEST(PidStep, VanishingDtDoesNotProduceNaN) {
  PidGains g{1.0, 0.0, 0.0, SignConvention::ErrorIsWMinusT, 1000.0};
  PidState st;
  st.prev_error = -1e308;
  st.prev_time = 1.0;
  const PidStep s = pid_step(st, g, 1e308, std::nextafter(1.0, 2.0));
  EXPECT_FALSE(std::isnan(s.p_out));
}

TEST(PidStep, PureFunctionWithoutIntegral) {
  PidState st;
  st.prev_error = 3.0;
  st.prev_time = 1.0;
  const auto a = pid_step(st, reference_gains(), 7.0, 1.7);
  const auto b = pid_step(st, reference_gains(), 7.0, 1.7);
  EXPECT_EQ(a.p_out, b.p_out);
}

TEST(PidStep, IntegralClampProperty) {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> err(-1e6, 1e6), dt(0.0, 50.0), clamp(0.0, 500.0),
      ki(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    PidGains g{0.9, ki(gen), 0.2, SignConvention::ErrorIsWMinusT, clamp(gen)};
    PidState st;
    double t = 0.0;
    for (int i = 0; i < 200; ++i) {
      t += dt(gen);
      st = pid_step(st, g, err(gen), t).state;
      ASSERT_LE(std::abs(st.integral), g.integral_clamp);
    }
  }
}

TEST(PidStep, SignSanity) {
  PidState st;
  st.prev_error = 10.0;
  st.prev_time = 0.0;
  EXPECT_GT(pid_step(st, reference_gains(), 10.0, 1.0).p_out, 0.0);
  st.prev_error = -10.0;
  EXPECT_LT(pid_step(st, reference_gains(), -10.0, 1.0).p_out, 0.0);

  // Negative gains with T - W describe the same loop.
  PidGains neg{-0.9, 0.0, -0.2, SignConvention::ErrorIsTMinusW, 1000.0};
  ControlTarget t;
  const double e = compute_error(35, t, neg);
  st.prev_error = e;
  EXPECT_NEAR(pid_step(st, neg, e, 1.0).p_out, 9.0, 1e-12);
}

TEST(PidStep, ProportionalPathIsLinear) {
  PidGains g{0.9, 0.0, 0.0, SignConvention::ErrorIsWMinusT, 1000.0};
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 100; ++i) {
    const double e = u(gen), alpha = u(gen);
    const double base = pid_step(PidState{}, g, e, 0.0).p_out;
    EXPECT_NEAR(pid_step(PidState{}, g, alpha * e, 0.0).p_out, alpha * base,
                1e-9 * std::max(1.0, std::abs(alpha * base)));
  }
}

TEST(WantedPool, Examples) {
  ControlTarget t;
  EXPECT_EQ(wanted_pool(5, 0.0, t), 5);
  EXPECT_EQ(wanted_pool(5, 9.0, t), 14);
  EXPECT_EQ(wanted_pool(2, -9.0, t), 1);
}

TEST(WantedPool, RoundsHalfAwayFromZero) {
  ControlTarget t;
  EXPECT_EQ(wanted_pool(5, 0.5, t), 6);
  EXPECT_EQ(wanted_pool(5, -0.5, t), 5);  // 4.5 -> 5
  EXPECT_EQ(wanted_pool(5, 0.49, t), 5);
  t.p_min = 0;
  EXPECT_EQ(wanted_pool(0, -0.5, t), 0);
}

TEST(WantedPool, AlwaysWithinBounds) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::int64_t> lo(0, 10), span(0, 50);
  std::uniform_real_distribution<double> out(-1e9, 1e9);
  for (int i = 0; i < 1000; ++i) {
    ControlTarget t;
    t.p_min = lo(gen);
    t.p_max = t.p_min + span(gen);
    std::uniform_int_distribution<std::int64_t> cur(t.p_min, t.p_max);
    const auto p = wanted_pool(cur(gen), out(gen), t);
    ASSERT_GE(p, t.p_min);
    ASSERT_LE(p, t.p_max);
  }
  EXPECT_EQ(wanted_pool(3, INFINITY, ControlTarget{}), 100);
  EXPECT_THROW(wanted_pool(3, NAN, ControlTarget{}), InvalidArgument);
}

TEST(PidController, DisabledHoldsPool) {
  PidController c(reference_gains(), ControlTarget{}, false);
  const auto d = c.evaluate(80, 6, 1.0);
  EXPECT_EQ(d.p_wanted, 6);
  EXPECT_EQ(d.error, 55.0);
  EXPECT_EQ(d.p_out, 0.0);
}

TEST(PidController, RejectsInvalidConfig) {
  PidGains bad = reference_gains();
  bad.integral_clamp = -1.0;
  EXPECT_THROW(PidController(bad, ControlTarget{}), InvalidArgument);
  ControlTarget t;
  t.p_min = 5;
  t.p_max = 2;
  EXPECT_THROW(PidController(reference_gains(), t), InvalidArgument);
  t = ControlTarget{};
  t.target_queue_length = -1.0;
  EXPECT_THROW(PidController(reference_gains(), t), InvalidArgument);
}

}  // namespace
}  // namespace edgescale
