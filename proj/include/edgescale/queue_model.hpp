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
#include <optional>

namespace edgescale {

using RequestId = std::uint64_t;

struct Request {
  RequestId id = 0;
  double arrival_time = 0.0;
  // Absent when the demand is drawn from the service distribution at
  // dispatch time.
  std::optional<double> service_demand;
};

// FIFO of waiting requests. The queue length is derived from request IDs the
// way the gateway/controller pair computes it: last arrived ID minus last
// dequeued ID, with 0 standing for "none yet". IDs start at 1.
class QueueState {
 public:
  // Throws InvalidArgument unless r.id == last_arrived_id() + 1 and any
  // service demand is positive.
  void enqueue(Request r);
  std::optional<Request> dequeue();

  std::uint64_t length() const { return last_arrived_id_ - last_dequeued_id_; }
  std::size_t pending_count() const { return pending_.size(); }
  bool empty() const { return pending_.empty(); }

  RequestId last_arrived_id() const { return last_arrived_id_; }
  RequestId last_dequeued_id() const { return last_dequeued_id_; }
  const std::deque<Request>& pending() const { return pending_; }

 private:
  RequestId last_arrived_id_ = 0;
  RequestId last_dequeued_id_ = 0;
  std::deque<Request> pending_;
};

inline std::uint64_t queue_length(const QueueState& q) { return q.length(); }

}  // namespace edgescale
