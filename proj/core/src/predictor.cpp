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

#include "riva/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riva/error.hpp"
#include "riva/hazard.hpp"

namespace riva {

HazardSeries hazard_series(std::span<const std::uint8_t> events, double q, double lambda,
                           double delta_t) {
  bool any_event = false;
  for (auto e : events) {
    if (e) {
      any_event = true;
      break;
    }
  }
  if (!any_event) fail(errc::too_few_exceedances, "no events in series");

  HazardSeries out;
  out.w.reserve(events.size());
  std::int64_t last_event = -1;
  bool seen_event = false;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i]) {
      last_event = static_cast<std::int64_t>(i);
      if (!seen_event) {
        seen_event = true;
        out.warmup_len = i;  // slots 0..i-1 used the series-start convention
      }
    }
    const double t = seen_event ? static_cast<double>(static_cast<std::int64_t>(i) - last_event)
                                : static_cast<double>(i);
    out.w.push_back(hazard_qexp(q, lambda, {t, delta_t}));
  }
  return out;
}

std::vector<std::uint8_t> generate_alarms(std::span<const double> w, double q_p) {
  if (!(q_p >= 0.0) || !(q_p <= 1.0)) fail(errc::invalid_params, "q_p must lie in [0, 1]");
  std::vector<std::uint8_t> alarms(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double v = w[i];
    if (!(v >= 0.0) || !(v <= 1.0)) {
      fail(errc::invalid_params, "hazard value outside [0, 1] at slot " + std::to_string(i));
    }
    alarms[i] = v >= q_p ? 1 : 0;
  }
  return alarms;
}

std::vector<std::uint8_t> alarm_series(std::span<const std::uint8_t> events, double q,
                                       double lambda, const AlarmConfig& config) {
  const auto hs = hazard_series(events, q, lambda, config.delta_t);
  return generate_alarms(hs.w, config.q_p);
}

ConfusionCounts score(std::span<const std::uint8_t> alarms, std::span<const std::uint8_t> events,
                      int delta_t) {
  if (alarms.size() != events.size()) {
    fail(errc::length_mismatch, "alarm and event series differ in length");
  }
  if (delta_t < 1) fail(errc::invalid_params, "delta_t must be at least 1 slot");
  const std::size_t len = alarms.size();
  if (len <= static_cast<std::size_t>(delta_t)) {
    fail(errc::insufficient_data, "series shorter than the scoring horizon");
  }
  const std::size_t scorable = len - static_cast<std::size_t>(delta_t);

  ConfusionCounts c;
  // Sliding count of events in (i, i + delta_t].
  std::int64_t window = 0;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(delta_t); ++j) window += events[j];
  for (std::size_t i = 0; i < scorable; ++i) {
    const bool hit = window > 0;
    if (alarms[i]) {
      (hit ? c.o11 : c.o10) += 1;
    } else {
      (hit ? c.o01 : c.o00) += 1;
    }
    // advance window from (i, i+dt] to (i+1, i+1+dt]
    window -= events[i + 1];
    if (i + 1 + static_cast<std::size_t>(delta_t) < len) {
      window += events[i + 1 + static_cast<std::size_t>(delta_t)];
    }
  }
  return c;
}

Rates rates(const ConfusionCounts& counts) {
  Rates r;
  const std::int64_t event_den = counts.o01 + counts.o11;
  const std::int64_t nonevent_den = counts.o00 + counts.o10;
  if (event_den > 0) r.d = static_cast<double>(counts.o11) / static_cast<double>(event_den);
  if (nonevent_den > 0) r.a = static_cast<double>(counts.o10) / static_cast<double>(nonevent_den);
  return r;
}

RocResult roc_curve(std::span<const double> w, std::span<const std::uint8_t> events,
                    std::span<const double> qp_grid, int delta_t) {
  if (w.size() != events.size()) {
    fail(errc::length_mismatch, "hazard and event series differ in length");
  }
  bool has_zero = false, has_one = false;
  for (double qp : qp_grid) {
    if (qp == 0.0) has_zero = true;
    if (qp == 1.0) has_one = true;
    if (!(qp >= 0.0) || !(qp <= 1.0)) fail(errc::invalid_params, "q_p grid value outside [0, 1]");
  }
  if (!has_zero || !has_one) {
    fail(errc::invalid_config, "q_p grid must include 0 and 1");
  }
  if (delta_t < 1) fail(errc::invalid_params, "delta_t must be at least 1 slot");
  if (w.size() <= static_cast<std::size_t>(delta_t)) {
    fail(errc::insufficient_data, "series shorter than the scoring horizon");
  }

  // Label every scorable slot, then resolve each threshold with a
  // suffix count over slots sorted by W. Identical counting to score():
  // alarms are exactly the slots with W >= q_p.
  const std::size_t scorable = w.size() - static_cast<std::size_t>(delta_t);
  std::vector<std::pair<double, std::uint8_t>> slots(scorable);
  std::int64_t window = 0;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(delta_t); ++j) window += events[j];
  std::int64_t total_events = 0;
  for (std::size_t i = 0; i < scorable; ++i) {
    const std::uint8_t label = window > 0 ? 1 : 0;
    if (!(w[i] >= 0.0) || !(w[i] <= 1.0)) {
      fail(errc::invalid_params, "hazard value outside [0, 1] at slot " + std::to_string(i));
    }
    slots[i] = {w[i], label};
    total_events += label;
    window -= events[i + 1];
    if (i + 1 + static_cast<std::size_t>(delta_t) < w.size()) {
      window += events[i + 1 + static_cast<std::size_t>(delta_t)];
    }
  }
  const std::int64_t total_nonevents = static_cast<std::int64_t>(scorable) - total_events;
  if (total_events == 0 || total_nonevents == 0) {
    fail(errc::undefined_rate, "ROC needs both event and non-event slots in the scored range");
  }

  std::sort(slots.begin(), slots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::int64_t> event_prefix(scorable + 1, 0);
  for (std::size_t i = 0; i < scorable; ++i) {
    event_prefix[i + 1] = event_prefix[i] + slots[i].second;
  }

  std::vector<double> grid(qp_grid.begin(), qp_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  RocResult roc;
  roc.points.reserve(grid.size());
  for (double qp : grid) {
    // first slot with W >= qp
    const auto it = std::lower_bound(
        slots.begin(), slots.end(), qp,
        [](const auto& s, double value) { return s.first < value; });
    const std::size_t k = static_cast<std::size_t>(it - slots.begin());
    const std::int64_t o11 = event_prefix[scorable] - event_prefix[k];
    const std::int64_t alarms_on = static_cast<std::int64_t>(scorable - k);
    const std::int64_t o10 = alarms_on - o11;
    const double d = static_cast<double>(o11) / static_cast<double>(total_events);
    const double a = static_cast<double>(o10) / static_cast<double>(total_nonevents);
    roc.points.push_back({qp, a, d});
  }

  // AUC by trapezoid in A.
  std::vector<RocPoint> by_a = roc.points;
  std::sort(by_a.begin(), by_a.end(), [](const RocPoint& p1, const RocPoint& p2) {
    return p1.a < p2.a || (p1.a == p2.a && p1.d < p2.d);
  });
  double auc = 0.0;
  for (std::size_t i = 1; i < by_a.size(); ++i) {
    auc += (by_a[i].a - by_a[i - 1].a) * 0.5 * (by_a[i].d + by_a[i - 1].d);
  }
  roc.auc = auc;
  return roc;
}

std::vector<double> default_qp_grid(std::span<const double> w) {
  std::vector<double> grid(w.begin(), w.end());
  grid.push_back(0.0);
  grid.push_back(1.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double d_at_false_alarm(const RocResult& roc, double a_star) {
  if (roc.points.empty()) fail(errc::insufficient_data, "empty ROC");
  std::vector<RocPoint> by_a = roc.points;
  std::sort(by_a.begin(), by_a.end(), [](const RocPoint& p1, const RocPoint& p2) {
    return p1.a < p2.a || (p1.a == p2.a && p1.d < p2.d);
  });
  if (a_star < by_a.front().a || a_star > by_a.back().a) {
    fail(errc::invalid_params, "a_star outside the span of the ROC curve");
  }
  // Exact matches: report the upper envelope.
  double exact = -1.0;
  for (const auto& p : by_a) {
    if (p.a == a_star) exact = std::max(exact, p.d);
  }
  if (exact >= 0.0) return exact;

  std::size_t hi = 0;
  while (by_a[hi].a < a_star) ++hi;
  const RocPoint& right = by_a[hi];
  const RocPoint& left = by_a[hi - 1];
  const double f = (a_star - left.a) / (right.a - left.a);
  return left.d + f * (right.d - left.d);
}

}  // namespace riva
