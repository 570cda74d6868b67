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

#include "riva/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riva/error.hpp"

namespace riva {

namespace {

void require_normalized(const VolatilitySeries& v, const char* op) {
  if (v.stage != VolStage::normalized) {
    fail(errc::wrong_stage, std::string(op) + ": expected a normalized series");
  }
}

}  // namespace

double threshold_for_mean_interval(const VolatilitySeries& normalized, double tau_q) {
  require_normalized(normalized, "threshold_for_mean_interval");
  const std::size_t n = normalized.points.size();
  if (!(tau_q > 1.0) || !(tau_q < static_cast<double>(n))) {
    fail(errc::tau_out_of_range,
         "tau_q must lie in (1, n); got tau_q=" + std::to_string(tau_q) +
             " with n=" + std::to_string(n));
  }
  const std::size_t exceed = static_cast<std::size_t>(std::floor(static_cast<double>(n) / tau_q));
  const std::size_t k = n - exceed;  // 1-based rank of the threshold order statistic

  std::vector<double> values = series_values(normalized);
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k - 1), values.end());
  return values[k - 1];
}

std::vector<std::int64_t> exceedance_positions(const VolatilitySeries& normalized, double threshold_q) {
  require_normalized(normalized, "exceedance_positions");
  std::vector<std::int64_t> positions;
  for (std::size_t i = 0; i < normalized.points.size(); ++i) {
    if (normalized.points[i].value > threshold_q) {
      positions.push_back(static_cast<std::int64_t>(i));
    }
  }
  return positions;
}

std::vector<std::uint8_t> exceedance_events(const VolatilitySeries& normalized, double threshold_q) {
  require_normalized(normalized, "exceedance_events");
  std::vector<std::uint8_t> events(normalized.points.size(), 0);
  for (std::size_t i = 0; i < normalized.points.size(); ++i) {
    events[i] = normalized.points[i].value > threshold_q ? 1 : 0;
  }
  return events;
}

IntervalSample extract_intervals(const VolatilitySeries& normalized, double threshold_q, double tau_q) {
  if (!(tau_q > 1.0)) {
    fail(errc::tau_out_of_range, "tau_q must exceed 1");
  }
  const auto positions = exceedance_positions(normalized, threshold_q);
  if (positions.size() < 2) {
    fail(errc::too_few_exceedances,
         "need at least 2 exceedances, found " + std::to_string(positions.size()));
  }
  IntervalSample sample;
  sample.tau_q = tau_q;
  sample.threshold_q = threshold_q;
  sample.raw.reserve(positions.size() - 1);
  sample.scaled.reserve(positions.size() - 1);
  for (std::size_t i = 1; i < positions.size(); ++i) {
    const std::int64_t tau = positions[i] - positions[i - 1];
    sample.raw.push_back(tau);
    sample.scaled.push_back(static_cast<double>(tau) / tau_q);
  }
  return sample;
}

std::vector<IntervalSample> sweep_tau(const VolatilitySeries& normalized, std::span<const double> tau_list) {
  std::vector<IntervalSample> samples;
  samples.reserve(tau_list.size());
  for (double tau_q : tau_list) {
    const double q = threshold_for_mean_interval(normalized, tau_q);
    samples.push_back(extract_intervals(normalized, q, tau_q));
  }
  return samples;
}

}  // namespace riva
