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

#include "edgescale/orchestrator.hpp"

#include <gtest/gtest.h>

#include "edgescale/errors.hpp"

namespace edgescale {
namespace {

const Orchestrator::DemandFn kDemand = [](const Request&) { return 2.0; };

void fill(QueueState& q, RequestId n) {
  for (RequestId id = q.last_arrived_id() + 1; id <= n; ++id) {
    q.enqueue(Request{id, 0.0, std::nullopt});
  }
}

PidController proportional(double kp, double target) {
  PidGains g{kp, 0.0, 0.0, SignConvention::ErrorIsWMinusT, 1000.0};
  ControlTarget t;
  t.target_queue_length = target;
  return PidController(g, t);
}

TEST(Orchestrator, InitialPoolIsParkedIdle) {
  Orchestrator o(PidController(PidGains{}, ControlTarget{}), 3);
  EXPECT_EQ(o.pool().size(), 3);
  EXPECT_EQ(o.pool().count(WorkerState::Idle), 3);
  EXPECT_EQ(o.pool().parked.size(), 3u);
  EXPECT_TRUE(o.samples().empty());
  EXPECT_THROW(Orchestrator(PidController(PidGains{}, ControlTarget{}), 0), InvalidArgument);
}

TEST(OnArrival, ParkedWorkersTakeRequestsFirst) {
  Orchestrator o(proportional(1.0, 25.0), 5);
  QueueState q;
  fill(q, 30);
  const auto actions = o.on_arrival(q, 1.0, kDemand);
  ASSERT_EQ(actions.size(), 5u);
  for (const auto& a : actions) EXPECT_TRUE(std::holds_alternative<Dispatch>(a));
  EXPECT_EQ(o.samples().back().w, 25);
  EXPECT_EQ(o.pool().count(WorkerState::Busy), 5);
}

TEST(OnArrival, PoolAlreadyCorrect) {
  Orchestrator o(proportional(1.0, 1.0), 5);
  QueueState q;
  fill(q, 5);
  o.on_arrival(q, 1.0, kDemand);  // all five busy, W = 0
  fill(q, 6);
  const auto actions = o.on_arrival(q, 2.0, kDemand);  // W = 1, error 0
  ASSERT_EQ(actions.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<NoOp>(actions[0]));
  EXPECT_EQ(o.pool().size(), 5);
  EXPECT_EQ(o.pool().p_wanted, 5);
}

TEST(OnArrival, CreatesDifference) {
  PidGains g{0.9, 0.0, 0.2, SignConvention::ErrorIsWMinusT, 1000.0};
  Orchestrator o(PidController(g, ControlTarget{}), 5);
  QueueState q;
  fill(q, 40);  // 5 dispatched to parked workers, W = 35, error = 10
  const auto actions = o.on_arrival(q, 11.0, kDemand);
  const auto* create = std::get_if<CreateWorkers>(&actions.back());
  ASSERT_NE(create, nullptr);
  EXPECT_EQ(create->count, 9);
  EXPECT_EQ(create->first_id, 6u);
  EXPECT_EQ(o.pool().size(), 14);
  EXPECT_EQ(o.pool().count(WorkerState::Starting), 9);
  ASSERT_EQ(o.samples().size(), 1u);
  EXPECT_EQ(o.samples()[0].w, 35);
  EXPECT_EQ(o.samples()[0].p, 5);
  EXPECT_EQ(o.samples()[0].p_wanted, 14);
  EXPECT_EQ(o.samples()[0].trigger, Trigger::Arrival);
}

TEST(OnArrival, NeverDestroys) {
  Orchestrator o(proportional(1.0, 25.0), 5);
  QueueState q;
  fill(q, 28);  // W = 23 after parked dispatch, P_w = 3
  const auto actions = o.on_arrival(q, 1.0, kDemand);
  for (const auto& a : actions) EXPECT_FALSE(std::holds_alternative<DestroyWorker>(a));
  EXPECT_EQ(o.pool().p_wanted, 3);
  EXPECT_EQ(o.pool().size(), 5);
}

TEST(OnPull, DestroysPullingWorkerWhenOversized) {
  Orchestrator o(proportional(1.0, 25.0), 6);
  QueueState q;
  fill(q, 23);  // W = 23 -> P_w = 4 with P = 6
  const auto action = o.on_pull(q, 3, 2.0, kDemand);
  const auto* destroy = std::get_if<DestroyWorker>(&action);
  ASSERT_NE(destroy, nullptr);
  EXPECT_EQ(destroy->worker, 3u);
  EXPECT_EQ(o.pool().size(), 5);
  EXPECT_EQ(o.pool().workers.count(3), 0u);
  EXPECT_EQ(q.length(), 23u);
}

TEST(OnPull, DispatchesHead) {
  Orchestrator o(proportional(1.0, 1.0), 5);
  QueueState q;
  fill(q, 42);
  for (int i = 0; i < 41; ++i) q.dequeue();
  const auto action = o.on_pull(q, 2, 7.0, kDemand);
  const auto* d = std::get_if<Dispatch>(&action);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->request, 42u);
  EXPECT_EQ(d->worker, 2u);
  const Worker& w = o.pool().workers.at(2);
  EXPECT_EQ(w.state, WorkerState::Busy);
  EXPECT_EQ(w.busy_until, 9.0);
  EXPECT_EQ(q.length(), 0u);
}

TEST(OnPull, EmptyQueueParks) {
  Orchestrator o(proportional(1.0, 0.0), 5);
  QueueState q;
  const auto action = o.on_pull(q, 4, 1.0, kDemand);
  EXPECT_TRUE(std::holds_alternative<NoOp>(action));
  EXPECT_EQ(o.pool().workers.at(4).state, WorkerState::Idle);
  EXPECT_EQ(o.pool().parked.back(), 4u);
}

TEST(OnPull, StartingWorkerBecomesIdleOnFirstPull) {
  PidGains g{0.9, 0.0, 0.2, SignConvention::ErrorIsWMinusT, 1000.0};
  Orchestrator o(PidController(g, ControlTarget{}), 1);
  QueueState q;
  fill(q, 40);
  o.on_arrival(q, 0.0, kDemand);
  ASSERT_EQ(o.pool().workers.at(2).state, WorkerState::Starting);
  const auto action = o.on_pull(q, 2, 1.0, kDemand);
  EXPECT_TRUE(std::holds_alternative<Dispatch>(action));
}

TEST(OnPull, ProtocolErrors) {
  Orchestrator o(proportional(1.0, 0.0), 2);
  QueueState q;
  fill(q, 5);
  EXPECT_THROW(o.on_pull(q, 99, 0.0, kDemand), ProtocolError);
  ASSERT_TRUE(std::holds_alternative<Dispatch>(o.on_pull(q, 1, 0.0, kDemand)));
  EXPECT_THROW(o.on_pull(q, 1, 0.0, kDemand), ProtocolError);
  EXPECT_THROW(o.on_service_complete(2, 0.0), ProtocolError);
  o.on_service_complete(1, 2.0);
  EXPECT_EQ(o.pool().workers.at(1).state, WorkerState::Idle);
  EXPECT_FALSE(o.pool().workers.at(1).busy_until.has_value());
}

TEST(OnPull, NeverShrinksBelowMinimum) {
  PidGains g{1.0, 0.0, 0.0, SignConvention::ErrorIsWMinusT, 1000.0};
  ControlTarget t;
  t.p_min = 2;
  Orchestrator o(PidController(g, t), 3);
  QueueState q;
  EXPECT_TRUE(std::holds_alternative<DestroyWorker>(o.on_pull(q, 1, 0.0, kDemand)));
  EXPECT_TRUE(std::holds_alternative<NoOp>(o.on_pull(q, 2, 0.0, kDemand)));
  EXPECT_TRUE(std::holds_alternative<NoOp>(o.on_pull(q, 3, 0.0, kDemand)));
  EXPECT_EQ(o.pool().size(), 2);
}

}  // namespace
}  // namespace edgescale
