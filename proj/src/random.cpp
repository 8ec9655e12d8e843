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

#include "edgescale/random.hpp"

#include <cmath>

#include "edgescale/errors.hpp"

namespace edgescale {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, RngStream stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                       static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream)};
}

}  // namespace

Rng::Rng(std::uint64_t seed, RngStream stream) {
  auto seq = make_seed_seq(seed, stream);
  engine_.seed(seq);
}

double Rng::uniform_open() {
  // (k + 0.5) / 2^53 for k in [0, 2^53): never 0, never 1.
  const std::uint64_t k = engine_() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double sample_exponential(Rng& rng, double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw InvalidArgument("sample_exponential: mean must be finite and > 0");
  }
  return -mean * std::log(rng.uniform_open());
}

double Distribution::sample(Rng& rng) const {
  switch (kind) {
    case Kind::Constant:
      return mean;
    case Kind::Exponential:
      return sample_exponential(rng, mean);
  }
  return mean;
}

void Distribution::validate(std::string_view what) const {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw ConfigError(std::string(what) + ".mean must be finite and > 0");
  }
}

std::string to_string(Distribution::Kind kind) {
  return kind == Distribution::Kind::Constant ? "constant" : "exponential";
}

Distribution::Kind parse_distribution_kind(std::string_view text) {
  if (text == "constant") return Distribution::Kind::Constant;
  if (text == "exponential") return Distribution::Kind::Exponential;
  throw ConfigError("unknown distribution kind '" + std::string(text) +
                    "' (expected constant or exponential)");
}

}  // namespace edgescale
