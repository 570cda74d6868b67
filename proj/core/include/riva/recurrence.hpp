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
#include <span>
#include <vector>

#include "riva/volatility.hpp"

namespace riva {

// Recurrence intervals above one threshold. scaled[i] == raw[i] / tau_q.
struct IntervalSample {
  double tau_q = 0.0;        // target mean recurrence time, slots
  double threshold_q = 0.0;  // threshold on normalized volatility
  std::vector<std::int64_t> raw;
  std::vector<double> scaled;

  std::size_t n() const { return raw.size(); }
};

// The threshold whose strict exceedances occur once per tau_q slots on
// average: Q is the ceil(n * (1 - 1/tau_q))-th order statistic, so the
// count of values strictly above Q is floor(n / tau_q) when values are
// distinct. Requires 1 < tau_q < n.
double threshold_for_mean_interval(const VolatilitySeries& normalized, double tau_q);

// 0-based positions (in series order, days concatenated) where v > q.
std::vector<std::int64_t> exceedance_positions(const VolatilitySeries& normalized, double threshold_q);

// Per-slot exceedance indicator, aligned with the series points.
std::vector<std::uint8_t> exceedance_events(const VolatilitySeries& normalized, double threshold_q);

// Differences of consecutive exceedance positions, in slot units.
// Requires at least 2 exceedances.
IntervalSample extract_intervals(const VolatilitySeries& normalized, double threshold_q, double tau_q);

std::vector<IntervalSample> sweep_tau(const VolatilitySeries& normalized, std::span<const double> tau_list);

}  // namespace riva
