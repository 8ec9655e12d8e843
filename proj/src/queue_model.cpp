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

#include "edgescale/queue_model.hpp"

#include <string>

#include "edgescale/errors.hpp"

namespace edgescale {

void QueueState::enqueue(Request r) {
  if (r.id != last_arrived_id_ + 1) {
    throw InvalidArgument("enqueue: expected request id " +
                          std::to_string(last_arrived_id_ + 1) + ", got " +
                          std::to_string(r.id));
  }
  if (r.service_demand && !(*r.service_demand > 0.0)) {
    throw InvalidArgument("enqueue: service demand of request " +
                          std::to_string(r.id) + " must be > 0");
  }
  last_arrived_id_ = r.id;
  pending_.push_back(std::move(r));
}

std::optional<Request> QueueState::dequeue() {
  if (pending_.empty()) return std::nullopt;
  Request head = std::move(pending_.front());
  pending_.pop_front();
  last_dequeued_id_ = head.id;
  return head;
}

}  // namespace edgescale
