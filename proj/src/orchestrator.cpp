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

#include <algorithm>
#include <string>

#include "edgescale/errors.hpp"

namespace edgescale {

const char* to_string(Trigger t) {
  return t == Trigger::Arrival ? "arrival" : "pull";
}

std::int64_t PoolState::count(WorkerState s) const {
  return std::count_if(workers.begin(), workers.end(),
                       [s](const auto& kv) { return kv.second.state == s; });
}

Orchestrator::Orchestrator(PidController controller, std::int64_t initial_pool,
                           double now)
    : controller_(std::move(controller)) {
  const ControlTarget& bounds = controller_.target();
  if (initial_pool < bounds.p_min || initial_pool > bounds.p_max) {
    throw InvalidArgument("initial pool " + std::to_string(initial_pool) +
                          " outside [p_min, p_max]");
  }
  for (std::int64_t i = 0; i < initial_pool; ++i) {
    Worker w;
    w.id = pool_.next_worker_id++;
    w.state = WorkerState::Idle;
    w.started_at = now;
    pool_.parked.push_back(w.id);
    pool_.workers.emplace(w.id, w);
  }
  pool_.p_wanted = initial_pool;
}

Worker& Orchestrator::find_worker(WorkerId id, const char* op) {
  auto it = pool_.workers.find(id);
  if (it == pool_.workers.end()) {
    throw ProtocolError(std::string(op) + ": unknown worker " + std::to_string(id));
  }
  return it->second;
}

ControlDecision Orchestrator::observe(const QueueState& queue, double now,
                                      Trigger trigger) {
  const auto w = static_cast<std::int64_t>(queue.length());
  const std::int64_t p = pool_.size();
  ControlDecision d = controller_.evaluate(static_cast<double>(w), p, now);
  pool_.p_wanted = d.p_wanted;
  ++evaluations_;
  if (record_samples_) {
    samples_.push_back(SampleRecord{now, w, d.error, p, d.p_wanted, d.p_out, trigger});
  }
  return d;
}

Dispatch Orchestrator::assign(Worker& worker, Request request, double now,
                              const DemandFn& demand) {
  const double service = demand(request);
  if (!(service > 0.0)) {
    throw InvalidArgument("service demand must be > 0");
  }
  worker.state = WorkerState::Busy;
  worker.busy_until = now + service;
  worker.serving = request.id;
  return Dispatch{request.id, worker.id, request.arrival_time, service};
}

std::vector<ScaleAction> Orchestrator::on_arrival(QueueState& queue, double now,
                                                  const DemandFn& demand) {
  std::vector<ScaleAction> actions;
  while (!pool_.parked.empty() && !queue.empty()) {
    Worker& worker = find_worker(pool_.parked.front(), "on_arrival");
    pool_.parked.pop_front();
    actions.emplace_back(assign(worker, *queue.dequeue(), now, demand));
  }

  const ControlDecision d = observe(queue, now, Trigger::Arrival);
  const std::int64_t p = pool_.size();
  if (d.p_wanted > p) {
    CreateWorkers create{d.p_wanted - p, pool_.next_worker_id};
    for (std::int64_t i = 0; i < create.count; ++i) {
      Worker w;
      w.id = pool_.next_worker_id++;
      w.state = WorkerState::Starting;
      w.started_at = now;
      pool_.workers.emplace(w.id, w);
    }
    actions.emplace_back(create);
  }
  if (actions.empty()) actions.emplace_back(NoOp{});
  return actions;
}

ScaleAction Orchestrator::on_pull(QueueState& queue, WorkerId id, double now,
                                  const DemandFn& demand) {
  Worker& worker = find_worker(id, "on_pull");
  if (worker.state == WorkerState::Busy) {
    throw ProtocolError("on_pull: worker " + std::to_string(id) +
                        " is still processing a request");
  }
  worker.state = WorkerState::Idle;
  std::erase(pool_.parked, id);

  const ControlDecision d = observe(queue, now, Trigger::Pull);
  if (d.p_wanted < pool_.size()) {
    pool_.workers.erase(id);
    return DestroyWorker{id};
  }
  if (auto request = queue.dequeue()) {
    return assign(worker, std::move(*request), now, demand);
  }
  pool_.parked.push_back(id);
  return NoOp{};
}

void Orchestrator::on_service_complete(WorkerId id, double /*now*/) {
  Worker& worker = find_worker(id, "on_service_complete");
  if (worker.state != WorkerState::Busy) {
    throw ProtocolError("on_service_complete: worker " + std::to_string(id) +
                        " is not busy");
  }
  worker.state = WorkerState::Idle;
  worker.busy_until.reset();
  worker.serving.reset();
}

}  // namespace edgescale
