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
#include <vector>

#include <doctest.h>

#include "riva/error.hpp"
#include "riva/recurrence.hpp"
#include "riva/rolling.hpp"
#include "riva/synthetic.hpp"
#include "support/oracles.hpp"

namespace {

// Raw-stage volatility whose exceedance intervals follow a known
// q-exponential renewal process (spikes over a zero background). The
// fitting tau is chosen below the true mean interval so the threshold
// lands under the spike floor and the event set is recovered exactly.
riva::VolatilitySeries spiked_raw(double q, double mean_interval, std::int64_t n,
                                  std::uint64_t seed) {
  riva::GeneratorSpec spec;
  spec.model = riva::QExpRenewalSpec{q, 1.0 / ((3.0 - 2.0 * q) * mean_interval)};
  spec.n = n;
  spec.seed = seed;
  const auto events = riva::renewal_event_series(spec);
  riva::VolatilitySeries v = oracles::spiked_volatility(events, seed + 1);
  v.stage = riva::VolStage::raw;  // feed the full preprocessing chain
  return v;
}

}  // namespace

TEST_CASE("rolling fit on a stationary generator concentrates around q = 1.3") {
  const double tau = 26.0;
  const auto raw = spiked_raw(1.3, 29.5, 200000, 301);
  riva::WindowSpec spec{50000, 25000, 100};
  const std::vector<double> taus = {tau};
  const auto trajectory = riva::rolling_fit(raw, taus, spec);

  const std::int64_t expected_windows =
      (static_cast<std::int64_t>(raw.points.size()) - spec.window_len) / spec.step + 1;
  CHECK(static_cast<std::int64_t>(trajectory.points.size()) == expected_windows);

  // A q = 1.3 renewal can legitimately blank a window with one enormous
  // interval; aggregate over the windows that fitted.
  std::vector<double> qs;
  for (const auto& p : trajectory.points) {
    REQUIRE(p.lambda_x.size() == 1);
    if (p.q_mean.has_value()) {
      qs.push_back(*p.q_mean);
      CHECK(p.lambda_x[0].has_value());
    }
  }
  REQUIRE(qs.size() >= trajectory.points.size() - 1);
  const double mean_q = oracles::mean_of(qs);
  CHECK(std::fabs(mean_q - 1.3) < 0.05);
  double var = 0.0;
  for (double v : qs) var += (v - mean_q) * (v - mean_q);
  CHECK(std::sqrt(var / static_cast<double>(qs.size())) <= 0.1);
}

TEST_CASE("a window covering the whole series equals the full fit") {
  const auto raw = spiked_raw(1.3, 24.5, 30000, 303);
  const std::vector<double> taus = {22.0};
  riva::WindowSpec spec{static_cast<std::int64_t>(raw.points.size()), 1000, 100};
  const auto trajectory = riva::rolling_fit(raw, taus, spec);
  REQUIRE(trajectory.points.size() == 1);

  const auto v = riva::normalize(riva::deseasonalize(raw, riva::intraday_pattern(raw)));
  const double q_threshold = riva::threshold_for_mean_interval(v, 22.0);
  const auto sample = riva::extract_intervals(v, q_threshold, 22.0);
  const auto fit = riva::fit_qexp(riva::make_scaled_sample(sample.scaled));

  REQUIRE(trajectory.points[0].q_mean.has_value());
  CHECK(*trajectory.points[0].q_mean == std::get<riva::QExpParams>(fit.params).q);
  CHECK(*trajectory.points[0].lambda_x[0] == std::get<riva::QExpParams>(fit.params).lambda_x);
}

TEST_CASE("a regime switch drags the trajectory across 1.3") {
  const double tau = 26.0;
  const double mean_interval = 29.5;
  const std::int64_t half = 150000;
  riva::GeneratorSpec low;
  low.model = riva::QExpRenewalSpec{1.1, 1.0 / ((3.0 - 2.2) * mean_interval)};
  low.n = half;
  low.seed = 305;
  riva::GeneratorSpec high;
  high.model = riva::QExpRenewalSpec{1.45, 1.0 / ((3.0 - 2.9) * mean_interval)};
  high.n = half;
  high.seed = 307;

  auto events = riva::renewal_event_series(low);
  const auto tail = riva::renewal_event_series(high);
  events.insert(events.end(), tail.begin(), tail.end());

  riva::VolatilitySeries raw = oracles::spiked_volatility(events, 309);
  raw.stage = riva::VolStage::raw;

  riva::WindowSpec spec{60000, 30000, 100};
  const std::vector<double> taus = {tau};
  const auto trajectory = riva::rolling_fit(raw, taus, spec);
  REQUIRE(trajectory.points.size() >= 5);

  REQUIRE(trajectory.points.front().q_mean.has_value());
  REQUIRE(trajectory.points.back().q_mean.has_value());
  CHECK(*trajectory.points.front().q_mean < 1.3);
  CHECK(*trajectory.points.back().q_mean > 1.3);
}

TEST_CASE("windows without enough intervals emit absent entries") {
  const auto raw = spiked_raw(1.3, 24.5, 30000, 311);
  riva::WindowSpec spec{20000, 10000, 1000000};  // unattainable interval count
  const std::vector<double> taus = {25.0};
  const auto trajectory = riva::rolling_fit(raw, taus, spec);
  for (const auto& p : trajectory.points) {
    CHECK(!p.q_mean.has_value());
    CHECK(!p.lambda_x[0].has_value());
  }
}

TEST_CASE("rolling_fit validates its inputs") {
  const auto raw = spiked_raw(1.3, 25.0, 5000, 313);
  const std::vector<double> taus = {25.0};
  CHECK_THROWS_AS(riva::rolling_fit(raw, taus, {10000, 5000, 100}), riva::Error);  // too short
  CHECK_THROWS_AS(riva::rolling_fit(raw, taus, {1000, 2000, 100}), riva::Error);   // step > window
}

TEST_CASE("slope_vs_tau") {
  SUBCASE("constant values give slope exactly zero") {
    const std::vector<double> values = {1.31, 1.31, 1.31};
    const std::vector<double> taus = {20, 60, 100};
    const auto fit = riva::slope_vs_tau(values, taus);
    CHECK(fit.slope == 0.0);
    CHECK(fit.intercept == doctest::Approx(1.31));
  }
  SUBCASE("hand-computed ols") {
    const std::vector<double> values = {1, 2, 3};
    const std::vector<double> taus = {20, 60, 100};
    const auto fit = riva::slope_vs_tau(values, taus);
    CHECK(fit.slope == doctest::Approx(0.025).epsilon(1e-14));
    CHECK(fit.intercept == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("needs at least three points") {
    const std::vector<double> values = {1, 2};
    const std::vector<double> taus = {20, 60};
    CHECK_THROWS_AS(riva::slope_vs_tau(values, taus), riva::Error);
  }
}
