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

#include <stdexcept>
#include <string>

namespace edgescale {

// Caller passed a value outside an operation's domain (NaN, negative time, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A worker or request message that the controller state machine cannot accept.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed configuration, trace file or CLI override.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Queueing parameters without a steady state (utilisation >= 1).
class UnstableSystem : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace edgescale
