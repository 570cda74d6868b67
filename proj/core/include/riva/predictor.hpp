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
#include <optional>
#include <span>
#include <vector>

namespace riva {

// How slots before the first observed event get their elapsed time.
enum class WarmupPolicy {
  elapsed_from_start,  // t counts from the series start, flagged via warmup_len
};

struct AlarmConfig {
  double q_p = 0.5;      // alarm threshold on W, in [0, 1]
  double delta_t = 1.0;  // horizon in slots
  WarmupPolicy warmup = WarmupPolicy::elapsed_from_start;
};

// Per-slot hazard W(delta_t | t) where t counts slots since the most
// recent event (t = 0 at an event slot). Slots before the first event
// use t = slots since the series start; warmup_len records how many
// leading slots relied on that convention.
struct HazardSeries {
  std::vector<double> w;
  std::size_t warmup_len = 0;
};

HazardSeries hazard_series(std::span<const std::uint8_t> events, double q, double lambda,
                           double delta_t = 1.0);

// alarm[i] = (w[i] >= q_p); the >= tie rule makes q_p = 0 all-on.
std::vector<std::uint8_t> generate_alarms(std::span<const double> w, double q_p);

// hazard_series + generate_alarms in one step.
std::vector<std::uint8_t> alarm_series(std::span<const std::uint8_t> events, double q,
                                       double lambda, const AlarmConfig& config);

struct ConfusionCounts {
  std::int64_t o11 = 0;  // hit
  std::int64_t o00 = 0;  // correct rejection
  std::int64_t o01 = 0;  // miss
  std::int64_t o10 = 0;  // false alarm
};

// Scores alarm[i] against the presence of any event in (i, i + delta_t].
// The trailing delta_t slots have no complete horizon and are excluded.
ConfusionCounts score(std::span<const std::uint8_t> alarms, std::span<const std::uint8_t> events,
                      int delta_t);

struct Rates {
  std::optional<double> d;  // O11 / (O01 + O11)
  std::optional<double> a;  // O10 / (O00 + O10)
};

Rates rates(const ConfusionCounts& counts);

struct RocPoint {
  double q_p = 0.0;
  double a = 0.0;
  double d = 0.0;
};

struct RocResult {
  std::vector<RocPoint> points;  // sorted by q_p ascending
  double auc = 0.0;              // trapezoid over points sorted by a
};

// The grid must contain 0 and 1 so the curve carries its exact
// endpoints (1,1) and (0,0).
RocResult roc_curve(std::span<const double> w, std::span<const std::uint8_t> events,
                    std::span<const double> qp_grid, int delta_t);

// Distinct W values plus {0, 1}: the exact empirical ROC grid.
std::vector<double> default_qp_grid(std::span<const double> w);

// D at false-alarm level a_star, linearly interpolated in A between the
// bracketing curve points (upper envelope on exact matches).
double d_at_false_alarm(const RocResult& roc, double a_star = 0.1);

}  // namespace riva
