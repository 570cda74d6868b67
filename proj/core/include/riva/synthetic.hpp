// Copyright 2026 The riva Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "riva/volatility.hpp"

namespace riva {

// Deterministic counter-style generator: SplitMix64 (Steele, Lea &
// Flood 2014). Pure 64-bit integer arithmetic, so the same seed yields
// the same stream on every platform. The algorithm is fixed for a major
// version; tests freeze against it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller on the uniform stream.
  double next_normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Exact inverse-survival draws; u is uniform in [0, 1).
double sample_qexp_interval(double q, double lambda, double u);
double sample_weibull_interval(double zeta, double d, double u);
double sample_exponential_interval(double rate, double u);

struct QExpRenewalSpec {
  double q = 1.3;
  double lambda = 0.01;  // raw interval units
};

struct ExponentialRenewalSpec {
  double rate = 0.02;
};

struct Weibull2RenewalSpec {
  double zeta = 1.0;
  double d = 50.0;
};

// Two-state multiplicative regime process: per slot the level is 1
// (calm) or level_ratio (turbulent) times |N(0,1)|, with the state
// persisting with the given stay probabilities.
struct ClusteredVolatilitySpec {
  double level_ratio = 5.0;
  double stay_calm = 0.99;
  double stay_turbulent = 0.99;
};

struct GeneratorSpec {
  std::variant<QExpRenewalSpec, ExponentialRenewalSpec, Weibull2RenewalSpec,
               ClusteredVolatilitySpec>
      model;
  std::int64_t n = 0;  // series length in slots
  std::uint64_t seed = 1;
  std::int32_t slots_per_day = 242;
};

// Continuous i.i.d. interval draws from the renewal model of spec.
std::vector<double> renewal_intervals(const GeneratorSpec& spec, std::size_t count);

// Boolean series with events at the cumulative ceil-rounded interval
// sums (intervals are never shorter than one slot).
std::vector<std::uint8_t> renewal_event_series(const GeneratorSpec& spec);

// Regime-switching volatility, normalized to unit standard deviation.
VolatilitySeries clustered_volatility(const GeneratorSpec& spec);

}  // namespace riva
