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

#include "riva/fitting.hpp"
#include "riva/volatility.hpp"

namespace riva {

struct WindowSpec {
  std::int64_t window_len = 0;  // slots
  std::int64_t step = 0;        // slots; 0 < step < window_len
  std::size_t min_intervals = 100;
};

// Whether the intraday pattern (and the normalization) is recomputed
// inside each window or taken from the full series once.
enum class PatternScope { per_window, global };

struct TrajectoryPoint {
  std::int64_t window_end = 0;  // index of the last slot in the window
  std::optional<double> q_mean;
  std::vector<std::optional<double>> lambda_x;  // aligned with tau_list
};

struct ParamTrajectory {
  std::vector<double> tau_list;
  std::vector<TrajectoryPoint> points;
};

// Per window: threshold, extract and fit the q-exponential for every
// tau in tau_list, average q over the taus that fit, keep lambda_x per
// tau. Windows where a tau yields fewer than min_intervals intervals
// get an absent entry for that tau.
ParamTrajectory rolling_fit(const VolatilitySeries& raw, std::span<const double> tau_list,
                            const WindowSpec& spec, PatternScope scope = PatternScope::per_window,
                            const FitOptions& options = {});

struct OlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
};

// Ordinary least squares of parameter values against tau_Q.
OlsFit slope_vs_tau(std::span<const double> values, std::span<const double> tau_list);

}  // namespace riva
