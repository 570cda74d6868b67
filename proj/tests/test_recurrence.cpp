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

#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "riva/error.hpp"
#include "riva/recurrence.hpp"
#include "riva/synthetic.hpp"

namespace {

riva::VolatilitySeries as_normalized(const std::vector<double>& values, std::int32_t slots = 242) {
  riva::VolatilitySeries v;
  v.stage = riva::VolStage::normalized;
  v.slots_per_day = slots;
  for (std::size_t i = 0; i < values.size(); ++i) {
    v.points.push_back({static_cast<std::int64_t>(i) / slots,
                        static_cast<std::int32_t>(static_cast<std::int64_t>(i) % slots),
                        values[i]});
  }
  return v;
}

std::vector<double> iid_half_normal(std::size_t n, std::uint64_t seed) {
  riva::SplitMix64 rng(seed);
  std::vector<double> values(n);
  for (auto& v : values) v = std::fabs(rng.next_normal());
  return values;
}

}  // namespace

TEST_CASE("threshold on 1..100 distinct values") {
  std::vector<double> values(100);
  std::iota(values.begin(), values.end(), 1.0);
  const auto v = as_normalized(values);
  const double q = riva::threshold_for_mean_interval(v, 20.0);
  CHECK(q == 95.0);
  CHECK(riva::exceedance_positions(v, q).size() == 5);
}

TEST_CASE("threshold rejects tau outside (1, n)") {
  const auto v = as_normalized(iid_half_normal(50, 1));
  CHECK_THROWS_AS(riva::threshold_for_mean_interval(v, 50.0), riva::Error);
  CHECK_THROWS_AS(riva::threshold_for_mean_interval(v, 1.0), riva::Error);
  CHECK_NOTHROW(riva::threshold_for_mean_interval(v, 49.5));
}

TEST_CASE("top one percent at tau 100") {
  const std::size_t n = 100000;
  const auto v = as_normalized(iid_half_normal(n, 2));
  const double q = riva::threshold_for_mean_interval(v, 100.0);
  const auto positions = riva::exceedance_positions(v, q);
  const double fraction = static_cast<double>(positions.size()) / static_cast<double>(n);
  CHECK(std::fabs(fraction - 0.01) <= 1.0 / static_cast<double>(n));
}

TEST_CASE("extract_intervals basics") {
  SUBCASE("successive differences") {
    std::vector<double> values(20, 0.0);
    for (std::size_t pos : {3u, 7u, 8u, 15u}) values[pos] = 2.0;
    const auto sample = riva::extract_intervals(as_normalized(values), 1.0, 5.0);
    CHECK(sample.raw == std::vector<std::int64_t>{4, 1, 7});
    CHECK(sample.scaled == std::vector<double>{0.8, 0.2, 1.4});
  }
  SUBCASE("saturated series gives all ones") {
    const std::vector<double> values(10, 5.0);
    const auto sample = riva::extract_intervals(as_normalized(values), 1.0, 2.0);
    CHECK(sample.raw == std::vector<std::int64_t>(9, 1));
  }
  SUBCASE("fewer than two exceedances fails") {
    std::vector<double> values(10, 0.0);
    values[4] = 2.0;
    CHECK_THROWS_AS(riva::extract_intervals(as_normalized(values), 1.0, 2.0), riva::Error);
  }
}

TEST_CASE("extraction matches a brute-force index scan") {
  const auto values = iid_half_normal(5000, 3);
  const auto v = as_normalized(values);
  const double q = riva::threshold_for_mean_interval(v, 25.0);
  const auto sample = riva::extract_intervals(v, q, 25.0);

  std::vector<std::int64_t> expected;
  std::int64_t last = -1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > q) {
      if (last >= 0) expected.push_back(static_cast<std::int64_t>(i) - last);
      last = static_cast<std::int64_t>(i);
    }
  }
  CHECK(sample.raw == expected);
}

TEST_CASE("interval conservation over the series") {
  const auto values = iid_half_normal(4321, 4);
  const auto v = as_normalized(values);
  const double q = riva::threshold_for_mean_interval(v, 15.0);
  const auto positions = riva::exceedance_positions(v, q);
  const auto sample = riva::extract_intervals(v, q, 15.0);

  const std::int64_t total = std::accumulate(sample.raw.begin(), sample.raw.end(), std::int64_t{0});
  const std::int64_t before_first = positions.front() + 1;  // slots up to and including it
  const std::int64_t after_last = static_cast<std::int64_t>(values.size()) - 1 - positions.back();
  CHECK(total + before_first + after_last == static_cast<std::int64_t>(values.size()));
}

TEST_CASE("sweep_tau is monotone in the threshold") {
  const auto v = as_normalized(iid_half_normal(30000, 5));
  const std::vector<double> taus = {20, 25, 40, 60, 80, 100};
  const auto samples = riva::sweep_tau(v, taus);
  REQUIRE(samples.size() == 6);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    CHECK(samples[i].threshold_q >= samples[i - 1].threshold_q);
    CHECK(samples[i].n() <= samples[i - 1].n());
  }
  CHECK(samples.back().threshold_q >= samples.front().threshold_q);
}

TEST_CASE("realized mean interval tracks tau on a long series") {
  const auto v = as_normalized(iid_half_normal(100000, 6));
  for (double tau : {20.0, 50.0, 100.0}) {
    const double q = riva::threshold_for_mean_interval(v, tau);
    const auto sample = riva::extract_intervals(v, q, tau);
    const double mean_raw =
        static_cast<double>(std::accumulate(sample.raw.begin(), sample.raw.end(), std::int64_t{0})) /
        static_cast<double>(sample.n());
    CHECK(mean_raw / tau > 0.9);
    CHECK(mean_raw / tau < 1.1);
    // scale closure: the scaled sample mean approaches 1
    const double mean_scaled = std::accumulate(sample.scaled.begin(), sample.scaled.end(), 0.0) /
                               static_cast<double>(sample.n());
    CHECK(std::fabs(mean_scaled - 1.0) < 0.1);
  }
}
