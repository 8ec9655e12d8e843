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
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "edgescale/control.hpp"
#include "edgescale/queue_model.hpp"
#include "edgescale/records.hpp"

namespace edgescale {

enum class WorkerState { Starting, Idle, Busy };

struct Worker {
  WorkerId id = 0;
  WorkerState state = WorkerState::Starting;
  double started_at = 0.0;
  std::optional<double> busy_until;  // set iff state == Busy
  std::optional<RequestId> serving;
};

struct PoolState {
  std::map<WorkerId, Worker> workers;
  WorkerId next_worker_id = 1;
  std::int64_t p_wanted = 0;
  // Idle workers that pulled on an empty queue, in parking order.
  std::deque<WorkerId> parked;

  std::int64_t size() const { return static_cast<std::int64_t>(workers.size()); }
  std::int64_t count(WorkerState s) const;
};

// The controller's scaling state machine. Creation happens only on arrival
// notifications (possibly many workers at once); destruction happens only on
// a pull and only for the pulling worker, which is idle by construction.
class Orchestrator {
 public:
  // Service demand of a request being dispatched (its own demand, or a draw
  // from the service distribution).
  using DemandFn = std::function<double(const Request&)>;

  // The initial pool is deployed and parked Idle at time `now`.
  Orchestrator(PidController controller, std::int64_t initial_pool,
               double now = 0.0);

  // The triggering request must already be enqueued. Parked workers take
  // waiting requests first, then the PID is evaluated on what remains.
  std::vector<ScaleAction> on_arrival(QueueState& queue, double now,
                                      const DemandFn& demand);

  // A Starting or Idle worker asks for work.
  ScaleAction on_pull(QueueState& queue, WorkerId worker, double now,
                      const DemandFn& demand);

  // Busy -> Idle once its request is done. The worker should then pull.
  void on_service_complete(WorkerId worker, double now);

  const PoolState& pool() const { return pool_; }
  const PidController& controller() const { return controller_; }
  const std::vector<SampleRecord>& samples() const { return samples_; }
  std::vector<SampleRecord> take_samples() { return std::move(samples_); }
  // Number of controller evaluations, recorded or not.
  std::uint64_t evaluations() const { return evaluations_; }
  void set_record_samples(bool on) { record_samples_ = on; }

 private:
  Worker& find_worker(WorkerId id, const char* op);
  ControlDecision observe(const QueueState& queue, double now, Trigger trigger);
  Dispatch assign(Worker& worker, Request request, double now,
                  const DemandFn& demand);

  PidController controller_;
  PoolState pool_;
  std::vector<SampleRecord> samples_;
  std::uint64_t evaluations_ = 0;
  bool record_samples_ = true;
};

}  // namespace edgescale
