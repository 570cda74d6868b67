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
#include <string>
#include <utility>
#include <vector>

#include "riva/distributions.hpp"

namespace riva {

// A scaled interval sample prepared for repeated likelihood evaluation:
// sorted ascending, with the logs and sufficient sums precomputed.
struct ScaledSample {
  std::vector<double> x;
  std::vector<double> log_x;
  double sum_x = 0.0;
  double sum_log_x = 0.0;

  std::size_t n() const { return x.size(); }
  double min_x() const { return x.front(); }
};

ScaledSample make_scaled_sample(std::span<const double> values);

// Scaled-space log likelihoods. For the two constrained families these
// match the raw-time likelihoods after the unit-mass/unit-mean reduction; the
// tau_Q-dependent additive constant cancels in scaled units.
double stretched_exp_loglik(double mu, const ScaledSample& sample);
double powerlaw_cutoff_loglik(double gamma, const ScaledSample& sample);
double qexp_loglik(double q, double lambda_x, const ScaledSample& sample);
double weibull2_loglik(double zeta, double d_x, const ScaledSample& sample);
double weibull3_loglik(double zeta, double d_x, double x0, const ScaledSample& sample);

// Search lattices. The one-parameter families resolve to 1e-6 steps,
// the multi-parameter families to 1e-5 per coordinate. Grid values are
// always materialized through these helpers so that a staged search and
// an exhaustive scan evaluate bit-identical abscissas.
namespace grid {

inline constexpr double kOneParamStep = 1e-6;
inline constexpr double kMultiParamStep = 1e-5;

inline double stretched_exp_mu(std::int64_t idx) { return static_cast<double>(idx) * kOneParamStep; }
inline double powerlaw_gamma(std::int64_t idx) { return -1.0 + static_cast<double>(idx) * kOneParamStep; }

inline constexpr std::int64_t kStretchedExpMaxIdx = 5000000;  // mu in (0, 5]
inline constexpr std::int64_t kPowerLawMaxIdx = 999999;       // gamma in (-1, 0)

}  // namespace grid

enum class FitDiagnostic {
  exponential_boundary,  // q-exponential optimum pinned at the q -> 1 edge
  lambda_at_bound,       // lambda_x reached its configured upper bound
};

std::string_view diagnostic_name(FitDiagnostic d);

struct FitResult {
  DistParams params;
  double log_likelihood = 0.0;
  std::vector<FitDiagnostic> diagnostics;
  // Best log likelihood after each refinement stage; non-decreasing.
  std::vector<double> stage_best_loglik;
};

struct FitOptions {
  std::size_t min_n = 100;
  double lambda_x_max = 1e3;
  bool concurrent = true;  // run the five family fits of fit_all_and_rank in parallel
};

FitResult fit_stretched_exp(const ScaledSample& sample, const FitOptions& options = {});
FitResult fit_powerlaw_cutoff(const ScaledSample& sample, const FitOptions& options = {});
FitResult fit_qexp(const ScaledSample& sample, const FitOptions& options = {});
FitResult fit_weibull2(const ScaledSample& sample, const FitOptions& options = {});
FitResult fit_weibull3(const ScaledSample& sample, const FitOptions& options = {});

// Two-sided KS distance between the empirical step function and the
// fitted CDF, evaluated at both limits of every sample point.
double ks_statistic(const ScaledSample& sample, const DistParams& params, double tau_q);

struct DistributionFit {
  DistFamily family;
  DistParams params;
  double log_likelihood = 0.0;
  double ks = 1.0;
  std::size_t n = 0;
  double tau_q = 0.0;
  std::vector<FitDiagnostic> diagnostics;
};

// {"family": ..., "params": {...}, "log_likelihood": ..., "ks": ..., "n": ..., "tau_q": ...}
std::string fit_to_json(const DistributionFit& fit);

struct RankedFits {
  std::vector<DistributionFit> fits;  // successful fits, KS ascending
  std::vector<std::pair<DistFamily, std::string>> failures;
};

RankedFits fit_all_and_rank(const ScaledSample& sample, double tau_q, const FitOptions& options = {});

}  // namespace riva
