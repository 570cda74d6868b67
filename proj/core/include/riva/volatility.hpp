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

#include "riva/table.hpp"

namespace riva {

enum class VolStage { raw, deseasonalized, normalized };

struct VolPoint {
  std::int64_t day = 0;
  std::int32_t slot = 0;
  double value = 0.0;  // >= 0 (absolute log-return based)
};

struct VolatilitySeries {
  std::vector<VolPoint> points;
  VolStage stage = VolStage::raw;
  std::int32_t slots_per_day = 0;
};

// Per-slot average volatility across days. Slots never observed have
// days_seen == 0 and their level is meaningless.
struct IntradayPattern {
  std::vector<double> level;        // length slots_per_day
  std::vector<std::int64_t> days_seen;
  std::int64_t day_count = 0;
};

// v(t) = |ln p(t) - ln p(t-1)| over consecutive records. With
// cross_day=false the first record of each day produces no return, so
// overnight gaps never leak into the minute-scale volatility.
VolatilitySeries log_abs_returns(const PriceSeries& prices, bool cross_day);

IntradayPattern intraday_pattern(const VolatilitySeries& raw);

// Divides each value by its slot's pattern level. A slot whose level is
// exactly zero (never any movement) maps to zero rather than an error.
VolatilitySeries deseasonalize(const VolatilitySeries& raw, const IntradayPattern& pattern);

// Scales by the uncentered-form standard deviation
// sqrt(<w^2> - <w>^2) with divisor n. Fails on constant input.
VolatilitySeries normalize(const VolatilitySeries& deseasonalized);

double population_std(std::span<const double> values);

std::vector<double> series_values(const VolatilitySeries& v);

}  // namespace riva
