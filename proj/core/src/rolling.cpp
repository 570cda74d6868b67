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

#include "riva/rolling.hpp"

#include <cmath>
#include <string>

#include "riva/error.hpp"
#include "riva/recurrence.hpp"

namespace riva {

ParamTrajectory rolling_fit(const VolatilitySeries& raw, std::span<const double> tau_list,
                            const WindowSpec& spec, PatternScope scope, const FitOptions& options) {
  if (raw.stage != VolStage::raw) {
    fail(errc::wrong_stage, "rolling_fit expects the raw volatility series");
  }
  if (!(spec.window_len > spec.step) || !(spec.step > 0)) {
    fail(errc::invalid_config, "require window_len > step > 0");
  }
  const std::int64_t len = static_cast<std::int64_t>(raw.points.size());
  if (len < spec.window_len) {
    fail(errc::insufficient_data, "series shorter than one window");
  }

  IntradayPattern global_pattern;
  if (scope == PatternScope::global) global_pattern = intraday_pattern(raw);

  FitOptions fit_options = options;
  fit_options.min_n = spec.min_intervals;

  ParamTrajectory trajectory;
  trajectory.tau_list.assign(tau_list.begin(), tau_list.end());

  for (std::int64_t start = 0; start + spec.window_len <= len; start += spec.step) {
    VolatilitySeries window;
    window.stage = VolStage::raw;
    window.slots_per_day = raw.slots_per_day;
    window.points.assign(raw.points.begin() + start,
                         raw.points.begin() + start + spec.window_len);

    TrajectoryPoint point;
    point.window_end = start + spec.window_len - 1;
    point.lambda_x.assign(tau_list.size(), std::nullopt);

    double q_sum = 0.0;
    std::size_t q_count = 0;
    try {
      const IntradayPattern& pattern =
          scope == PatternScope::per_window ? intraday_pattern(window) : global_pattern;
      const VolatilitySeries v = normalize(deseasonalize(window, pattern));
      for (std::size_t k = 0; k < tau_list.size(); ++k) {
        try {
          const double tau = tau_list[k];
          const double q_threshold = threshold_for_mean_interval(v, tau);
          const IntervalSample sample = extract_intervals(v, q_threshold, tau);
          if (sample.n() < spec.min_intervals) continue;
          const FitResult fit = fit_qexp(make_scaled_sample(sample.scaled), fit_options);
          const auto& params = std::get<QExpParams>(fit.params);
          q_sum += params.q;
          ++q_count;
          point.lambda_x[k] = params.lambda_x;
        } catch (const Error&) {
          // this tau stays absent for this window
        }
      }
    } catch (const Error&) {
      // preprocessing failed (e.g. constant window); emit an empty point
    }
    if (q_count > 0) point.q_mean = q_sum / static_cast<double>(q_count);
    trajectory.points.push_back(std::move(point));
  }
  return trajectory;
}

OlsFit slope_vs_tau(std::span<const double> values, std::span<const double> tau_list) {
  if (values.size() != tau_list.size()) {
    fail(errc::length_mismatch, "values and tau_list differ in length");
  }
  const std::size_t n = values.size();
  if (n < 3) fail(errc::insufficient_data, "need at least 3 tau points for a slope");

  double tau_mean = 0.0, val_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    tau_mean += tau_list[i];
    val_mean += values[i];
  }
  tau_mean /= static_cast<double>(n);
  val_mean /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dt = tau_list[i] - tau_mean;
    sxx += dt * dt;
    sxy += dt * (values[i] - val_mean);
  }
  if (sxx == 0.0) fail(errc::invalid_params, "tau values must not be all equal");

  OlsFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = val_mean - fit.slope * tau_mean;

  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = values[i] - (fit.intercept + fit.slope * tau_list[i]);
    ss_res += resid * resid;
  }
  fit.stderr_slope = std::sqrt(ss_res / static_cast<double>(n - 2) / sxx);
  return fit;
}

}  // namespace riva
