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

#include "riva/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "riva/error.hpp"
#include "riva/special_functions.hpp"

namespace riva {

std::string_view family_name(DistFamily family) {
  switch (family) {
    case DistFamily::stretched_exp: return "stretched_exp";
    case DistFamily::powerlaw_cutoff: return "powerlaw_cutoff";
    case DistFamily::q_exp: return "q_exp";
    case DistFamily::weibull2: return "weibull2";
    case DistFamily::weibull3: return "weibull3";
  }
  return "unknown";
}

DistFamily family_of(const DistParams& params) {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StretchedExpParams>) return DistFamily::stretched_exp;
        if constexpr (std::is_same_v<T, PowerLawCutoffParams>) return DistFamily::powerlaw_cutoff;
        if constexpr (std::is_same_v<T, QExpParams>) return DistFamily::q_exp;
        if constexpr (std::is_same_v<T, Weibull2Params>) return DistFamily::weibull2;
        if constexpr (std::is_same_v<T, Weibull3Params>) return DistFamily::weibull3;
      },
      params);
}

void validate_params(const DistParams& params) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StretchedExpParams>) {
          if (!(p.mu > 0.0) || !std::isfinite(p.mu)) {
            fail(errc::invalid_params, "stretched_exp: mu must be positive");
          }
        } else if constexpr (std::is_same_v<T, PowerLawCutoffParams>) {
          if (!(p.gamma > -1.0) || !(p.gamma < 0.0)) {
            fail(errc::invalid_params, "powerlaw_cutoff: gamma must lie in (-1, 0)");
          }
        } else if constexpr (std::is_same_v<T, QExpParams>) {
          if (!(p.q > 1.0) || !(p.q < 2.0)) {
            fail(errc::invalid_params, "q_exp: q must lie in (1, 2)");
          }
          if (!(p.lambda_x > 0.0) || !std::isfinite(p.lambda_x)) {
            fail(errc::invalid_params, "q_exp: lambda_x must be positive");
          }
        } else if constexpr (std::is_same_v<T, Weibull2Params>) {
          if (!(p.zeta > 0.0) || !(p.d_x > 0.0)) {
            fail(errc::invalid_params, "weibull2: zeta and d_x must be positive");
          }
        } else if constexpr (std::is_same_v<T, Weibull3Params>) {
          if (!(p.zeta > 0.0) || !(p.d_x > 0.0) || !(p.x0 >= 0.0)) {
            fail(errc::invalid_params, "weibull3: zeta, d_x must be positive and x0 >= 0");
          }
        }
      },
      params);
}

double support_origin(const DistParams& params) {
  if (const auto* w3 = std::get_if<Weibull3Params>(&params)) return w3->x0;
  return 0.0;
}

namespace {

// Scaled-space log coefficients of the stretched exponential:
// ln(a tau_Q) and ln(b tau_Q). Kept in log space so small mu does not
// overflow the Gamma ratios.
struct StretchedExpLogCoeffs {
  double ln_a_x;
  double ln_b_x;
};

StretchedExpLogCoeffs se_log_coeffs(double mu) {
  const double lg1 = log_gamma_fn(1.0 / mu);
  const double lg2 = log_gamma_fn(2.0 / mu);
  return {std::log(mu) + lg2 - 2.0 * lg1, lg2 - lg1};
}

double se_pdf(double mu, double x) {
  const auto c = se_log_coeffs(mu);
  if (x == 0.0) return std::exp(c.ln_a_x);
  return std::exp(c.ln_a_x - std::exp(mu * (c.ln_b_x + std::log(x))));
}

double se_y(double mu, double x) {
  // (b tau_Q x)^mu
  const auto c = se_log_coeffs(mu);
  return std::exp(mu * (c.ln_b_x + std::log(x)));
}

double plc_pdf(double gamma, double x) {
  const double alpha = -gamma;
  const double ln_c_x = alpha * std::log(alpha) - log_gamma_fn(alpha);
  if (x == 0.0) {
    return alpha < 1.0 ? std::numeric_limits<double>::infinity() : std::exp(ln_c_x);
  }
  return std::exp(ln_c_x + (alpha - 1.0) * std::log(x) - alpha * x);
}

double weibull_pow(double zeta, double d_x, double y) {
  // ((y) / d_x)^zeta for y >= 0
  if (y == 0.0) return 0.0;
  return std::exp(zeta * (std::log(y) - std::log(d_x)));
}

}  // namespace

double pdf(const DistParams& params, double x, double tau_q) {
  validate_params(params);
  (void)tau_q;  // scaled forms are tau_q-free once the constraints are folded in
  if (!(x >= 0.0)) fail(errc::invalid_params, "pdf requires x >= 0");
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StretchedExpParams>) {
          return se_pdf(p.mu, x);
        } else if constexpr (std::is_same_v<T, PowerLawCutoffParams>) {
          return plc_pdf(p.gamma, x);
        } else if constexpr (std::is_same_v<T, QExpParams>) {
          const double u = (p.q - 1.0) * p.lambda_x * x;
          return (2.0 - p.q) * p.lambda_x * std::exp(-std::log1p(u) / (p.q - 1.0));
        } else if constexpr (std::is_same_v<T, Weibull2Params>) {
          if (x == 0.0) {
            if (p.zeta < 1.0) return std::numeric_limits<double>::infinity();
            if (p.zeta > 1.0) return 0.0;
            return 1.0 / p.d_x;
          }
          const double y = x / p.d_x;
          return p.zeta / p.d_x * std::pow(y, p.zeta - 1.0) * std::exp(-std::pow(y, p.zeta));
        } else {
          if (!(x > p.x0)) {
            fail(errc::invalid_params, "weibull3 density requires x > x0");
          }
          const double y = (x - p.x0) / p.d_x;
          return p.zeta / p.d_x * std::pow(y, p.zeta - 1.0) * std::exp(-std::pow(y, p.zeta));
        }
      },
      params);
}

double cdf(const DistParams& params, double x, double tau_q) {
  validate_params(params);
  (void)tau_q;
  if (!(x >= 0.0)) fail(errc::invalid_params, "cdf requires x >= 0");
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StretchedExpParams>) {
          if (x == 0.0) return 0.0;
          return reg_lower_gamma(1.0 / p.mu, se_y(p.mu, x));
        } else if constexpr (std::is_same_v<T, PowerLawCutoffParams>) {
          const double alpha = -p.gamma;
          return reg_lower_gamma(alpha, alpha * x);
        } else if constexpr (std::is_same_v<T, QExpParams>) {
          const double e = (p.q - 2.0) / (p.q - 1.0);
          const double u = (p.q - 1.0) * p.lambda_x * x;
          return -std::expm1(e * std::log1p(u));
        } else if constexpr (std::is_same_v<T, Weibull2Params>) {
          return -std::expm1(-weibull_pow(p.zeta, p.d_x, x));
        } else {
          if (x <= p.x0) return 0.0;
          return -std::expm1(-weibull_pow(p.zeta, p.d_x, x - p.x0));
        }
      },
      params);
}

double survival(const DistParams& params, double x, double tau_q) {
  validate_params(params);
  (void)tau_q;
  if (!(x >= 0.0)) fail(errc::invalid_params, "survival requires x >= 0");
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StretchedExpParams>) {
          if (x == 0.0) return 1.0;
          return reg_upper_gamma(1.0 / p.mu, se_y(p.mu, x));
        } else if constexpr (std::is_same_v<T, PowerLawCutoffParams>) {
          const double alpha = -p.gamma;
          return reg_upper_gamma(alpha, alpha * x);
        } else if constexpr (std::is_same_v<T, QExpParams>) {
          const double e = (p.q - 2.0) / (p.q - 1.0);
          const double u = (p.q - 1.0) * p.lambda_x * x;
          return std::exp(e * std::log1p(u));
        } else if constexpr (std::is_same_v<T, Weibull2Params>) {
          return std::exp(-weibull_pow(p.zeta, p.d_x, x));
        } else {
          if (x <= p.x0) return 1.0;
          return std::exp(-weibull_pow(p.zeta, p.d_x, x - p.x0));
        }
      },
      params);
}

StretchedExpCoeffs stretched_exp_coeffs(double mu, double tau_q) {
  if (!(mu > 0.0)) fail(errc::invalid_params, "mu must be positive");
  if (!(tau_q > 0.0)) fail(errc::invalid_params, "tau_q must be positive");
  const auto c = se_log_coeffs(mu);
  return {std::exp(c.ln_a_x - std::log(tau_q)), std::exp(c.ln_b_x - std::log(tau_q))};
}

PowerLawCutoffCoeffs powerlaw_cutoff_coeffs(double gamma, double tau_q) {
  if (!(gamma > -1.0) || !(gamma < 0.0)) {
    fail(errc::invalid_params, "gamma must lie in (-1, 0)");
  }
  if (!(tau_q > 0.0)) fail(errc::invalid_params, "tau_q must be positive");
  const double alpha = -gamma;
  const double k = alpha / tau_q;
  const double c = std::exp(alpha * std::log(k) - log_gamma_fn(alpha));
  return {c, k};
}

}  // namespace riva
