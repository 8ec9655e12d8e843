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

#include "edgescale/sim_kernel.hpp"

#include <cmath>
#include <map>
#include <queue>

#include "edgescale/errors.hpp"
#include "edgescale/orchestrator.hpp"

namespace edgescale {

void SimConfig::validate() const {
  if (!(horizon > 0.0) || std::isnan(horizon)) {
    throw ConfigError("horizon must be > 0");
  }
  startup_delay.validate("startup_delay");
  service_time.validate("service_time");
  if (!trace_rows) workload.validate();
  try {
    gains.validate();
    target.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("control: ") + e.what());
  }
  const std::int64_t p0 = resolved_initial_pool();
  if (p0 < target.p_min || p0 > target.p_max) {
    throw ConfigError("control.initial_pool must lie in [p_min, p_max]");
  }
}

namespace {

struct EventOrder {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

class Simulation {
 public:
  explicit Simulation(const SimConfig& cfg)
      : cfg_(cfg),
        arrival_rng_(cfg.seed, RngStream::kArrivals),
        service_rng_(cfg.seed, RngStream::kService),
        startup_rng_(cfg.seed, RngStream::kStartup),
        workload_(cfg.trace_rows ? Workload(cfg.workload, *cfg.trace_rows)
                                 : Workload(cfg.workload)),
        orchestrator_(PidController(cfg.gains, cfg.target, cfg.control_enabled),
                      cfg.resolved_initial_pool()),
        w_avg_(0.0, 0.0),
        p_avg_(0.0, static_cast<double>(cfg.resolved_initial_pool())) {
    orchestrator_.set_record_samples(cfg.record_samples);
    demand_ = [this](const Request& r) {
      return r.service_demand ? *r.service_demand : cfg_.service_time.sample(service_rng_);
    };
  }

  SimResult run() {
    SimResult result;
    schedule_next_arrival(0.0);

    double end_time = 0.0;
    while (!events_.empty()) {
      Event ev = events_.top();
      if (ev.time > cfg_.horizon) {
        end_time = cfg_.horizon;
        break;
      }
      events_.pop();
      now_ = ev.time;
      end_time = now_;
      w_avg_.advance(now_);
      p_avg_.advance(now_);
      ++event_index_;

      switch (ev.kind) {
        case EventKind::Arrival: handle_arrival(ev); break;
        case EventKind::StartupComplete: pull(ev.worker); break;
        case EventKind::ServiceComplete: handle_completion(ev); break;
      }

      const auto w = static_cast<std::int64_t>(queue_.length());
      max_w_ = std::max(max_w_, w);
      w_avg_.set(static_cast<double>(w));
      p_avg_.set(static_cast<double>(orchestrator_.pool().size()));
      if (cfg_.record_events) result.events.push_back(ev);
    }
    w_avg_.advance(end_time);
    p_avg_.advance(end_time);

    RunSummary& s = result.summary;
    s.time_average_w = w_avg_.mean();
    s.time_average_p = p_avg_.mean();
    s.max_w = max_w_;
    s.requests_generated = generated_;
    s.requests_served = served_;
    s.requests_in_queue = queue_.length();
    s.requests_in_service =
        static_cast<std::uint64_t>(orchestrator_.pool().count(WorkerState::Busy));
    s.mean_response_time = served_ > 0 ? response_sum_ / static_cast<double>(served_) : 0.0;
    s.creations = creations_;
    s.destructions = destructions_;
    s.initial_p = cfg_.resolved_initial_pool();
    s.final_p = orchestrator_.pool().size();
    s.end_time = end_time;
    s.samples = orchestrator_.evaluations();
    s.seed = cfg_.seed;
    s.rng = std::string(Rng::kAlgorithm);

    result.samples = orchestrator_.take_samples();
    result.actions = std::move(actions_);
    return result;
  }

 private:
  void push(Event ev) {
    ev.seq = next_seq_++;
    ev.scheduled_at = now_;
    events_.push(std::move(ev));
  }

  void schedule_next_arrival(double not_before) {
    auto r = workload_.next_arrival(arrival_rng_);
    if (!r) return;
    if (r->arrival_time < not_before) {
      throw ConfigError("workload produced an arrival in the past");
    }
    Event ev;
    ev.kind = EventKind::Arrival;
    ev.time = r->arrival_time;
    ev.request = std::move(*r);
    push(std::move(ev));
  }

  void handle_arrival(const Event& ev) {
    queue_.enqueue(ev.request);
    ++generated_;
    for (auto& action : orchestrator_.on_arrival(queue_, now_, demand_)) {
      apply(std::move(action), Trigger::Arrival);
    }
    schedule_next_arrival(now_);
  }

  void handle_completion(const Event& ev) {
    in_service_.erase(ev.worker);
    ++served_;
    response_sum_ += now_ - ev.request.arrival_time;
    orchestrator_.on_service_complete(ev.worker, now_);
    pull(ev.worker);
  }

  void pull(WorkerId worker) {
    apply(orchestrator_.on_pull(queue_, worker, now_, demand_), Trigger::Pull);
  }

  void apply(ScaleAction action, Trigger trigger) {
    ActionRecord rec;
    rec.time = now_;
    rec.event_index = event_index_;
    rec.trigger = trigger;
    if (const auto* create = std::get_if<CreateWorkers>(&action)) {
      creations_ += static_cast<std::uint64_t>(create->count);
      for (std::int64_t i = 0; i < create->count; ++i) {
        Event ev;
        ev.kind = EventKind::StartupComplete;
        ev.worker = create->first_id + static_cast<WorkerId>(i);
        ev.time = now_ + cfg_.startup_delay.sample(startup_rng_);
        push(std::move(ev));
      }
    } else if (const auto* destroy = std::get_if<DestroyWorker>(&action)) {
      ++destructions_;
      rec.target_was_serving = in_service_.count(destroy->worker) != 0;
    } else if (const auto* dispatch = std::get_if<Dispatch>(&action)) {
      in_service_.emplace(dispatch->worker, dispatch->request);
      Event ev;
      ev.kind = EventKind::ServiceComplete;
      ev.worker = dispatch->worker;
      ev.request.id = dispatch->request;
      ev.request.arrival_time = dispatch->arrival_time;
      ev.time = now_ + dispatch->service_demand;
      push(std::move(ev));
    }
    if (!cfg_.record_actions || std::holds_alternative<NoOp>(action)) return;
    rec.pool_after = orchestrator_.pool().size();
    rec.action = std::move(action);
    actions_.push_back(std::move(rec));
  }

  const SimConfig& cfg_;
  Rng arrival_rng_;
  Rng service_rng_;
  Rng startup_rng_;
  Workload workload_;
  Orchestrator orchestrator_;
  QueueState queue_;
  Orchestrator::DemandFn demand_;
  std::priority_queue<Event, std::vector<Event>, EventOrder> events_;
  std::map<WorkerId, RequestId> in_service_;
  std::vector<ActionRecord> actions_;
  TimeWeightedAverage w_avg_;
  TimeWeightedAverage p_avg_;
  double now_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t event_index_ = 0;
  std::uint64_t generated_ = 0;
  std::uint64_t served_ = 0;
  std::uint64_t creations_ = 0;
  std::uint64_t destructions_ = 0;
  std::int64_t max_w_ = 0;
  double response_sum_ = 0.0;
};

}  // namespace

SimResult run(const SimConfig& cfg) {
  cfg.validate();
  return Simulation(cfg).run();
}

}  // namespace edgescale
