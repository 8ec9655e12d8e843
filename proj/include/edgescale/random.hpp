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
#include <random>
#include <string>
#include <string_view>

namespace edgescale {

// Independent substreams of one run. Each stream's engine is seeded with
// seed_seq{seed_lo, seed_hi, stream}, so streams differ in every run.
enum class RngStream : std::uint32_t {
  kArrivals = 1,
  kService = 2,
  kStartup = 3,
};

class Rng {
 public:
  static constexpr std::string_view kAlgorithm =
      "mt19937_64 seeded by seed_seq(seed_lo32, seed_hi32, stream_id)";

  Rng(std::uint64_t seed, RngStream stream);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1) with 53-bit resolution. Computed
  // from raw engine output so draws do not depend on the standard
  // library's distribution implementation.
  double uniform_open();

 private:
  std::mt19937_64 engine_;
};

// -mean * ln(u), u ~ U(0,1). Always strictly positive.
double sample_exponential(Rng& rng, double mean);

struct Distribution {
  enum class Kind { Constant, Exponential };
  Kind kind = Kind::Exponential;
  double mean = 1.0;

  double sample(Rng& rng) const;
  void validate(std::string_view what) const;
};

std::string to_string(Distribution::Kind kind);
Distribution::Kind parse_distribution_kind(std::string_view text);

}  // namespace edgescale
