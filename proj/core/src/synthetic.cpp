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

#include "riva/synthetic.hpp"

#include <cmath>
#include <string>

#include "riva/error.hpp"

namespace riva {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::int64_t kMaxSeriesLength = 100000000;  // 1e8 slots

void validate_series_length(std::int64_t n) {
  if (n <= 0) fail(errc::invalid_config, "series length must be positive");
  if (n > kMaxSeriesLength) {
    fail(errc::invalid_config, "series length " + std::to_string(n) + " exceeds the memory budget");
  }
}

}  // namespace

double SplitMix64::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - next_double();  // (0, 1]
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  has_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

double sample_qexp_interval(double q, double lambda, double u) {
  if (!(q > 1.0) || !(q < 2.0)) fail(errc::invalid_params, "q must lie in (1, 2)");
  if (!(lambda > 0.0)) fail(errc::invalid_params, "lambda must be positive");
  if (!(u >= 0.0) || !(u < 1.0)) fail(errc::invalid_params, "u must lie in [0, 1)");
  const double e = (q - 1.0) / (q - 2.0);
  return std::expm1(e * std::log1p(-u)) / ((q - 1.0) * lambda);
}

double sample_weibull_interval(double zeta, double d, double u) {
  if (!(zeta > 0.0) || !(d > 0.0)) fail(errc::invalid_params, "zeta and d must be positive");
  if (!(u >= 0.0) || !(u < 1.0)) fail(errc::invalid_params, "u must lie in [0, 1)");
  return d * std::pow(-std::log1p(-u), 1.0 / zeta);
}

double sample_exponential_interval(double rate, double u) {
  if (!(rate > 0.0)) fail(errc::invalid_params, "rate must be positive");
  if (!(u >= 0.0) || !(u < 1.0)) fail(errc::invalid_params, "u must lie in [0, 1)");
  return -std::log1p(-u) / rate;
}

std::vector<double> renewal_intervals(const GeneratorSpec& spec, std::size_t count) {
  SplitMix64 rng(spec.seed);
  std::vector<double> intervals;
  intervals.reserve(count);
  std::visit(
      [&](const auto& model) {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, QExpRenewalSpec>) {
          for (std::size_t i = 0; i < count; ++i) {
            intervals.push_back(sample_qexp_interval(model.q, model.lambda, rng.next_double()));
          }
        } else if constexpr (std::is_same_v<T, ExponentialRenewalSpec>) {
          for (std::size_t i = 0; i < count; ++i) {
            intervals.push_back(sample_exponential_interval(model.rate, rng.next_double()));
          }
        } else if constexpr (std::is_same_v<T, Weibull2RenewalSpec>) {
          for (std::size_t i = 0; i < count; ++i) {
            intervals.push_back(sample_weibull_interval(model.zeta, model.d, rng.next_double()));
          }
        } else {
          fail(errc::invalid_config, "clustered volatility is not a renewal model");
        }
      },
      spec.model);
  return intervals;
}

std::vector<std::uint8_t> renewal_event_series(const GeneratorSpec& spec) {
  validate_series_length(spec.n);
  if (std::holds_alternative<ClusteredVolatilitySpec>(spec.model)) {
    fail(errc::invalid_config, "clustered volatility is not a renewal model");
  }
  SplitMix64 rng(spec.seed);
  std::vector<std::uint8_t> events(static_cast<std::size_t>(spec.n), 0);

  auto draw = [&]() -> double {
    return std::visit(
        [&](const auto& model) -> double {
          using T = std::decay_t<decltype(model)>;
          if constexpr (std::is_same_v<T, QExpRenewalSpec>) {
            return sample_qexp_interval(model.q, model.lambda, rng.next_double());
          } else if constexpr (std::is_same_v<T, ExponentialRenewalSpec>) {
            return sample_exponential_interval(model.rate, rng.next_double());
          } else if constexpr (std::is_same_v<T, Weibull2RenewalSpec>) {
            return sample_weibull_interval(model.zeta, model.d, rng.next_double());
          } else {
            return 0.0;
          }
        },
        spec.model);
  };

  std::int64_t position = 0;
  while (true) {
    double tau = std::ceil(draw());
    if (tau < 1.0) tau = 1.0;
    position += static_cast<std::int64_t>(tau);
    if (position >= spec.n) break;
    events[static_cast<std::size_t>(position)] = 1;
  }
  return events;
}

VolatilitySeries clustered_volatility(const GeneratorSpec& spec) {
  validate_series_length(spec.n);
  const auto* model = std::get_if<ClusteredVolatilitySpec>(&spec.model);
  if (model == nullptr) {
    fail(errc::invalid_config, "spec does not describe a clustered volatility model");
  }
  if (!(model->stay_calm >= 0.0) || !(model->stay_calm <= 1.0) ||
      !(model->stay_turbulent >= 0.0) || !(model->stay_turbulent <= 1.0)) {
    fail(errc::invalid_config, "stay probabilities must lie in [0, 1]");
  }
  if (!(model->level_ratio > 0.0)) {
    fail(errc::invalid_config, "level ratio must be positive");
  }
  if (spec.slots_per_day <= 0) fail(errc::invalid_config, "slots_per_day must be positive");

  SplitMix64 rng(spec.seed);
  VolatilitySeries series;
  series.stage = VolStage::deseasonalized;
  series.slots_per_day = spec.slots_per_day;
  series.points.reserve(static_cast<std::size_t>(spec.n));

  bool turbulent = false;
  for (std::int64_t i = 0; i < spec.n; ++i) {
    const double level = turbulent ? model->level_ratio : 1.0;
    const double value = level * std::fabs(rng.next_normal());
    series.points.push_back({i / spec.slots_per_day,
                             static_cast<std::int32_t>(i % spec.slots_per_day), value});
    const double stay = turbulent ? model->stay_turbulent : model->stay_calm;
    if (rng.next_double() >= stay) turbulent = !turbulent;
  }
  return normalize(series);
}

}  // namespace riva
