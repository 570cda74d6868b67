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

#include <cstddef>
#include <vector>

#include "riva/distributions.hpp"
#include "riva/recurrence.hpp"

namespace riva {

struct HazardQuery {
  double t = 0.0;        // slots since the last event, >= 0
  double delta_t = 1.0;  // horizon in slots, > 0 (0 is allowed and gives W = 0)
};

// q-exponential survival S(t) = [1 + (q-1) lambda t]^(1 - 1/(q-1)),
// with lambda in raw interval units.
double survival_qexp(double q, double lambda, double t);

// Closed-form hazard W(dt|t) = 1 - S(t+dt)/S(t). The survival-ratio
// form is used because it stays accurate when W is small; it is
// algebraically identical to the direct bracketed expression.
double hazard_qexp(double q, double lambda, const HazardQuery& query);

// Hazard for any fitted family: the numerator of
//   W = int_t^{t+dt} p(s) ds / int_t^inf p(s) ds
// is evaluated by adaptive quadrature of the scaled density (with a
// power substitution when the support edge is singular) and the
// denominator by the closed-form survival. Query times are in slots;
// params are in scaled units with scale tau_q.
double hazard_numeric(const DistParams& params, double tau_q, const HazardQuery& query,
                      double rel_tol = 1e-6);

struct EmpiricalHazard {
  double w = 0.0;
  std::size_t tail_count = 0;  // number of intervals exceeding t
};

// W = #{tau : t < tau <= t + dt} / #{tau : tau > t}. Fails with
// InsufficientTail when fewer than min_count intervals exceed t.
EmpiricalHazard hazard_empirical(const IntervalSample& sample, const HazardQuery& query,
                                 std::size_t min_count = 20);

struct HazardCurvePoint {
  double t = 0.0;
  double w_analytic = 0.0;
  bool has_empirical = false;
  double w_empirical = 0.0;
  std::size_t n_tail = 0;
};

struct HazardCurve {
  double delta_t = 1.0;
  std::vector<HazardCurvePoint> points;
};

// Analytic + empirical hazard on integer t while at least min_count
// intervals remain in the tail. lambda is in raw interval units.
HazardCurve hazard_curve_qexp(double q, double lambda, const IntervalSample& sample,
                              double delta_t, std::size_t min_count = 20);

}  // namespace riva
