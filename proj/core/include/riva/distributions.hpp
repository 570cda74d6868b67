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

#include <string_view>
#include <variant>

namespace riva {

// The five candidate recurrence-interval families, in scaled units
// x = tau / tau_Q. The stretched exponential and the power law with
// exponential cutoff carry one free parameter each: their remaining
// coefficients are pinned by the unit-mass and unit-mean constraints
//   integral f(x) dx = 1,  integral x f(x) dx = 1,
// which gives
//   a = mu * Gamma(2/mu) / (Gamma(1/mu)^2 * tau_Q),
//   b = Gamma(2/mu) / (Gamma(1/mu) * tau_Q),
// and
//   k = -gamma / tau_Q,  c = (-gamma/tau_Q)^(-gamma) / Gamma(-gamma).
enum class DistFamily { stretched_exp, powerlaw_cutoff, q_exp, weibull2, weibull3 };

std::string_view family_name(DistFamily family);

struct StretchedExpParams {
  double mu = 1.0;  // > 0
};

struct PowerLawCutoffParams {
  double gamma = -0.5;  // in (-1, 0)
};

struct QExpParams {
  double q = 1.3;        // in (1, 2)
  double lambda_x = 1.0;  // lambda * tau_Q, > 0
};

struct Weibull2Params {
  double zeta = 1.0;  // > 0
  double d_x = 1.0;   // d / tau_Q, > 0
};

struct Weibull3Params {
  double zeta = 1.0;
  double d_x = 1.0;
  double x0 = 0.0;  // tau_0 / tau_Q, >= 0
};

using DistParams = std::variant<StretchedExpParams, PowerLawCutoffParams, QExpParams,
                                Weibull2Params, Weibull3Params>;

DistFamily family_of(const DistParams& params);

// Throws invalid_params when a parameter is outside its domain.
void validate_params(const DistParams& params);

// Left edge of the support in scaled units (x0 for weibull3, else 0).
double support_origin(const DistParams& params);

// Scaled density f(x), distribution function F(x) and survival
// S(x) = 1 - F(x). The tau_q argument feeds the raw-coefficient
// reconstruction of the constrained families; the scaled forms
// themselves are tau_q-free.
double pdf(const DistParams& params, double x, double tau_q);
double cdf(const DistParams& params, double x, double tau_q);
double survival(const DistParams& params, double x, double tau_q);

// Raw-time coefficients implied by the constrained parameterizations.
struct StretchedExpCoeffs {
  double a;
  double b;
};
StretchedExpCoeffs stretched_exp_coeffs(double mu, double tau_q);

struct PowerLawCutoffCoeffs {
  double c;
  double k;
};
PowerLawCutoffCoeffs powerlaw_cutoff_coeffs(double gamma, double tau_q);

}  // namespace riva
