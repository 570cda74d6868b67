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

#include "riva/volatility.hpp"

#include <cmath>
#include <string>

#include "riva/error.hpp"

namespace riva {

namespace {

void require_stage(const VolatilitySeries& v, VolStage expected, const char* op) {
  if (v.stage != expected) {
    fail(errc::wrong_stage, std::string(op) + ": input series has the wrong stage");
  }
}

}  // namespace

double population_std(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0, sum_sq = 0.0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

std::vector<double> series_values(const VolatilitySeries& v) {
  std::vector<double> out;
  out.reserve(v.points.size());
  for (const auto& p : v.points) out.push_back(p.value);
  return out;
}

VolatilitySeries log_abs_returns(const PriceSeries& prices, bool cross_day) {
  if (prices.records.size() < 2) {
    fail(errc::insufficient_data, "need at least 2 price records");
  }
  VolatilitySeries out;
  out.stage = VolStage::raw;
  out.slots_per_day = prices.slots_per_day;
  out.points.reserve(prices.records.size() - 1);
  for (std::size_t i = 1; i < prices.records.size(); ++i) {
    const auto& prev = prices.records[i - 1];
    const auto& cur = prices.records[i];
    if (!cross_day && cur.day != prev.day) continue;
    out.points.push_back({cur.day, cur.slot, std::fabs(std::log(cur.price) - std::log(prev.price))});
  }
  if (out.points.empty()) {
    fail(errc::insufficient_data, "no consecutive records within a day");
  }
  return out;
}

IntradayPattern intraday_pattern(const VolatilitySeries& raw) {
  require_stage(raw, VolStage::raw, "intraday_pattern");
  if (raw.points.empty()) fail(errc::insufficient_data, "empty volatility series");

  IntradayPattern pattern;
  pattern.level.assign(static_cast<std::size_t>(raw.slots_per_day), 0.0);
  pattern.days_seen.assign(static_cast<std::size_t>(raw.slots_per_day), 0);

  std::int64_t last_day = raw.points.front().day - 1;
  for (const auto& p : raw.points) {
    pattern.level[static_cast<std::size_t>(p.slot)] += p.value;
    pattern.days_seen[static_cast<std::size_t>(p.slot)] += 1;
    if (p.day != last_day) {
      last_day = p.day;
      ++pattern.day_count;
    }
  }
  for (std::size_t s = 0; s < pattern.level.size(); ++s) {
    if (pattern.days_seen[s] > 0) {
      pattern.level[s] /= static_cast<double>(pattern.days_seen[s]);
    }
  }
  return pattern;
}

VolatilitySeries deseasonalize(const VolatilitySeries& raw, const IntradayPattern& pattern) {
  require_stage(raw, VolStage::raw, "deseasonalize");
  if (pattern.level.size() != static_cast<std::size_t>(raw.slots_per_day)) {
    fail(errc::length_mismatch, "pattern computed for a different slots_per_day");
  }
  VolatilitySeries out;
  out.stage = VolStage::deseasonalized;
  out.slots_per_day = raw.slots_per_day;
  out.points.reserve(raw.points.size());
  for (const auto& p : raw.points) {
    const std::size_t s = static_cast<std::size_t>(p.slot);
    if (pattern.days_seen[s] == 0) {
      fail(errc::slot_missing_in_pattern,
           "slot " + std::to_string(p.slot) + " present in series but absent in pattern");
    }
    const double a = pattern.level[s];
    out.points.push_back({p.day, p.slot, a == 0.0 ? 0.0 : p.value / a});
  }
  return out;
}

VolatilitySeries normalize(const VolatilitySeries& deseasonalized) {
  require_stage(deseasonalized, VolStage::deseasonalized, "normalize");
  if (deseasonalized.points.empty()) fail(errc::insufficient_data, "empty volatility series");

  const auto values = series_values(deseasonalized);
  const double sigma = population_std(values);
  if (sigma <= 0.0) {
    fail(errc::zero_variance, "constant series cannot be normalized");
  }
  VolatilitySeries out;
  out.stage = VolStage::normalized;
  out.slots_per_day = deseasonalized.slots_per_day;
  out.points.reserve(deseasonalized.points.size());
  for (const auto& p : deseasonalized.points) {
    out.points.push_back({p.day, p.slot, p.value / sigma});
  }
  return out;
}

}  // namespace riva
