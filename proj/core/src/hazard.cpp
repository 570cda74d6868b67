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

#include "riva/hazard.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riva/error.hpp"
#include "riva/quadrature.hpp"
#include "riva/special_functions.hpp"

namespace riva {

namespace {

void validate_qexp(double q, double lambda) {
  if (!(q > 1.0) || !(q < 2.0)) fail(errc::invalid_params, "q must lie in (1, 2)");
  if (!(lambda > 0.0)) fail(errc::invalid_params, "lambda must be positive");
}

void validate_query(const HazardQuery& query) {
  if (!(query.t >= 0.0)) fail(errc::invalid_params, "query.t must be >= 0");
  if (!(query.delta_t >= 0.0)) fail(errc::invalid_params, "query.delta_t must be >= 0");
}

// Shape exponent of the density at its support edge: f ~ (x - x0)^(p-1).
double edge_exponent(const DistParams& params) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StretchedExpParams>) return p.mu;
        if constexpr (std::is_same_v<T, PowerLawCutoffParams>) return -p.gamma;
        if constexpr (std::is_same_v<T, QExpParams>) return 1.0;
        if constexpr (std::is_same_v<T, Weibull2Params>) return p.zeta;
        if constexpr (std::is_same_v<T, Weibull3Params>) return p.zeta;
      },
      params);
}

// Integral of the scaled density over [a, b]. When the interval starts
// at a singular support edge (p < 1), the substitution u = (x - x0)^p
// turns the integrand into a smooth exponential before quadrature.
double integrate_pdf(const DistParams& params, double a, double b, double rel_tol) {
  if (b <= a) return 0.0;
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;

  const double origin = support_origin(params);
  const double p = edge_exponent(params);
  if (a > origin || p >= 1.0) {
    // Edge not touched or density bounded there; integrate directly.
    return integrate([&](double x) { return pdf(params, x, 1.0); }, a, b, opt);
  }

  return std::visit(
      [&](const auto& par) -> double {
        using T = std::decay_t<decltype(par)>;
        if constexpr (std::is_same_v<T, StretchedExpParams>) {
          // u = x^mu; f dx = exp(ln_a - b_pow u) u^(1/mu - 1) / mu du
          const double mu = par.mu;
          const double lg1 = log_gamma_fn(1.0 / mu);
          const double lg2 = log_gamma_fn(2.0 / mu);
          const double ln_a = std::log(mu) + lg2 - 2.0 * lg1;
          const double b_pow = std::exp(mu * (lg2 - lg1));
          const double e = 1.0 / mu - 1.0;
          auto g = [&](double u) {
            if (u == 0.0) return 0.0;
            return std::exp(ln_a - b_pow * u + e * std::log(u)) / mu;
          };
          return integrate(g, std::pow(a, mu), std::pow(b, mu), opt);
        } else if constexpr (std::is_same_v<T, PowerLawCutoffParams>) {
          // u = x^alpha; f dx = (C/alpha) exp(-alpha u^(1/alpha)) du
          const double alpha = -par.gamma;
          const double ln_c = alpha * std::log(alpha) - log_gamma_fn(alpha);
          auto g = [&](double u) {
            return std::exp(ln_c - alpha * std::pow(u, 1.0 / alpha)) / alpha;
          };
          return integrate(g, std::pow(a, alpha), std::pow(b, alpha), opt);
        } else if constexpr (std::is_same_v<T, Weibull2Params> ||
                             std::is_same_v<T, Weibull3Params>) {
          double zeta, d_x, x0 = 0.0;
          if constexpr (std::is_same_v<T, Weibull3Params>) {
            zeta = par.zeta;
            d_x = par.d_x;
            x0 = par.x0;
          } else {
            zeta = par.zeta;
            d_x = par.d_x;
          }
          // u = (x - x0)^zeta; f dx = d^-zeta exp(-u d^-zeta) du
          const double dz = std::pow(d_x, zeta);
          auto g = [&](double u) { return std::exp(-u / dz) / dz; };
          const double ua = a <= x0 ? 0.0 : std::pow(a - x0, zeta);
          const double ub = std::pow(b - x0, zeta);
          return integrate(g, ua, ub, opt);
        } else {
          return integrate([&](double x) { return pdf(params, x, 1.0); }, a, b, opt);
        }
      },
      params);
}

}  // namespace

double survival_qexp(double q, double lambda, double t) {
  validate_qexp(q, lambda);
  if (!(t >= 0.0)) fail(errc::invalid_params, "t must be >= 0");
  const double e = (q - 2.0) / (q - 1.0);
  return std::exp(e * std::log1p((q - 1.0) * lambda * t));
}

double hazard_qexp(double q, double lambda, const HazardQuery& query) {
  validate_qexp(q, lambda);
  validate_query(query);
  if (query.delta_t == 0.0) return 0.0;
  const double e = (q - 2.0) / (q - 1.0);
  const double a = (q - 1.0) * lambda;
  const double log_ratio = std::log1p(a * (query.t + query.delta_t)) - std::log1p(a * query.t);
  return -std::expm1(e * log_ratio);
}

double hazard_numeric(const DistParams& params, double tau_q, const HazardQuery& query,
                      double rel_tol) {
  validate_params(params);
  validate_query(query);
  if (!(tau_q > 0.0)) fail(errc::invalid_params, "tau_q must be positive");
  if (query.delta_t == 0.0) return 0.0;

  const double x_lo = query.t / tau_q;
  const double x_hi = (query.t + query.delta_t) / tau_q;
  const double origin = support_origin(params);
  if (x_hi <= origin) return 0.0;

  const double den = survival(params, x_lo, tau_q);
  if (den < 1e-300) {
    fail(errc::numeric_failure, "survival below 1e-300 at t = " + std::to_string(query.t));
  }
  const double num = integrate_pdf(params, std::max(x_lo, origin), x_hi, rel_tol);
  return std::clamp(num / den, 0.0, 1.0);
}

namespace {

EmpiricalHazard empirical_from_sorted(const std::vector<std::int64_t>& sorted,
                                      const HazardQuery& query, std::size_t min_count) {
  // intervals in (t, t + dt] over intervals > t
  const auto tail_begin = std::upper_bound(sorted.begin(), sorted.end(), query.t);
  const std::size_t tail = static_cast<std::size_t>(sorted.end() - tail_begin);
  if (tail < min_count) {
    fail(errc::insufficient_tail, "only " + std::to_string(tail) +
                                      " intervals exceed t; need " + std::to_string(min_count));
  }
  const auto hit_end = std::upper_bound(tail_begin, sorted.end(), query.t + query.delta_t);
  const std::size_t hits = static_cast<std::size_t>(hit_end - tail_begin);
  return {static_cast<double>(hits) / static_cast<double>(tail), tail};
}

}  // namespace

EmpiricalHazard hazard_empirical(const IntervalSample& sample, const HazardQuery& query,
                                 std::size_t min_count) {
  validate_query(query);
  std::vector<std::int64_t> sorted = sample.raw;
  std::sort(sorted.begin(), sorted.end());
  return empirical_from_sorted(sorted, query, min_count);
}

HazardCurve hazard_curve_qexp(double q, double lambda, const IntervalSample& sample,
                              double delta_t, std::size_t min_count) {
  validate_qexp(q, lambda);
  if (!(delta_t > 0.0)) fail(errc::invalid_params, "delta_t must be positive");
  std::vector<std::int64_t> sorted = sample.raw;
  std::sort(sorted.begin(), sorted.end());

  HazardCurve curve;
  curve.delta_t = delta_t;
  for (double t = 0.0;; t += 1.0) {
    const auto tail_begin = std::upper_bound(sorted.begin(), sorted.end(), t);
    const std::size_t tail = static_cast<std::size_t>(sorted.end() - tail_begin);
    if (tail < min_count) break;
    HazardCurvePoint pt;
    pt.t = t;
    pt.w_analytic = hazard_qexp(q, lambda, {t, delta_t});
    const auto hit_end = std::upper_bound(tail_begin, sorted.end(), t + delta_t);
    pt.w_empirical = static_cast<double>(hit_end - tail_begin) / static_cast<double>(tail);
    pt.has_empirical = true;
    pt.n_tail = tail;
    curve.points.push_back(pt);
  }
  return curve;
}

}  // namespace riva
