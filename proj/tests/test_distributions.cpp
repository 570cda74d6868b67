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

#include "riva/distributions.hpp"
#include "riva/error.hpp"
#include "riva/special_functions.hpp"
#include "riva/synthetic.hpp"
#include "support/oracles.hpp"

using riva::DistParams;
using riva::PowerLawCutoffParams;
using riva::QExpParams;
using riva::StretchedExpParams;
using riva::Weibull2Params;
using riva::Weibull3Params;

TEST_CASE("q-exponential density at the origin is (2-q) lambda_x") {
  const DistParams p = QExpParams{1.3, 2.5};
  CHECK(riva::pdf(p, 0.0, 100.0) == doctest::Approx((2.0 - 1.3) * 2.5).epsilon(1e-14));
}

TEST_CASE("stretched exponential with mu = 1 is the unit exponential") {
  const DistParams p = StretchedExpParams{1.0};
  for (double x : {0.0, 0.3, 1.0, 2.7, 6.0}) {
    CHECK(riva::pdf(p, x, 50.0) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
  }
  // The implied raw coefficients collapse to a = b = 1 / tau_Q.
  const auto coeffs = riva::stretched_exp_coeffs(1.0, 50.0);
  CHECK(coeffs.a == doctest::Approx(1.0 / 50.0).epsilon(1e-12));
  CHECK(coeffs.b == doctest::Approx(1.0 / 50.0).epsilon(1e-12));
}

TEST_CASE("weibull with zeta = 1, d_x = 1 is the unit exponential") {
  const DistParams p = Weibull2Params{1.0, 1.0};
  for (double x : {0.0, 0.5, 1.0, 3.0}) {
    CHECK(riva::pdf(p, x, 10.0) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
  }
}

TEST_CASE("powerlaw cutoff coefficient reconstruction") {
  const auto coeffs = riva::powerlaw_cutoff_coeffs(-0.5, 100.0);
  CHECK(coeffs.k == doctest::Approx(0.005).epsilon(1e-14));
  // c k^gamma Gamma(-gamma) = 1 by the unit-mass constraint
  CHECK(coeffs.c * std::pow(coeffs.k, -0.5) * riva::gamma_fn(0.5) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unit mass and unit mean for the constrained families") {
  riva::SplitMix64 rng(31);
  for (int rep = 0; rep < 6; ++rep) {
    const double mu = 0.25 + 2.5 * rng.next_double();
    const DistParams se = StretchedExpParams{mu};
    const double x_max_se = oracles::tail_cutoff(se, 1e-12);
    CHECK(oracles::integrate_pdf_oracle(se, 0.0, x_max_se) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(oracles::integrate_pdf_oracle(se, 0.0, x_max_se, true) ==
          doctest::Approx(1.0).epsilon(1e-4));

    const double gamma = -0.9 + 0.8 * rng.next_double();
    const DistParams pl = PowerLawCutoffParams{gamma};
    const double x_max_pl = oracles::tail_cutoff(pl, 1e-12);
    CHECK(oracles::integrate_pdf_oracle(pl, 0.0, x_max_pl) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(oracles::integrate_pdf_oracle(pl, 0.0, x_max_pl, true) ==
          doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("every family integrates to unit mass over its effective support") {
  const std::vector<DistParams> cases = {
      StretchedExpParams{0.7},        StretchedExpParams{2.2},
      PowerLawCutoffParams{-0.45},    QExpParams{1.2, 1.4},
      QExpParams{1.45, 3.0},          Weibull2Params{0.85, 1.2},
      Weibull3Params{1.3, 0.8, 0.4},
  };
  for (const auto& params : cases) {
    const double origin = riva::support_origin(params);
    const double x_max = oracles::tail_cutoff(params, 1e-7);
    const double mass = oracles::integrate_pdf_oracle(params, origin, x_max);
    CHECK(std::fabs(mass - riva::cdf(params, x_max, 1.0)) < 1e-5);
    CHECK(mass > 1.0 - 1e-5 - 1e-6);  // within 1e-5 of full mass, minus the cut tail
    CHECK(mass < 1.0 + 1e-5);
  }
}

TEST_CASE("cdf vanishes at the support origin") {
  CHECK(riva::cdf(StretchedExpParams{0.8}, 0.0, 1.0) == 0.0);
  CHECK(riva::cdf(PowerLawCutoffParams{-0.4}, 0.0, 1.0) == 0.0);
  CHECK(riva::cdf(QExpParams{1.4, 1.0}, 0.0, 1.0) == 0.0);
  CHECK(riva::cdf(Weibull2Params{1.2, 0.9}, 0.0, 1.0) == 0.0);
  CHECK(riva::cdf(Weibull3Params{1.2, 0.9, 0.35}, 0.35, 1.0) == 0.0);
  CHECK(riva::cdf(Weibull3Params{1.2, 0.9, 0.35}, 0.1, 1.0) == 0.0);
}

TEST_CASE("q-exponential collapses to the exponential as q -> 1") {
  const DistParams p = QExpParams{1.0 + 1e-6, 1.0};
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    CHECK(std::fabs(riva::cdf(p, x, 1.0) - (1.0 - std::exp(-x))) < 1e-6);
  }
}

TEST_CASE("cdf equals the integrated pdf on a grid for all families") {
  const std::vector<DistParams> cases = {
      StretchedExpParams{0.6},          StretchedExpParams{1.7},
      PowerLawCutoffParams{-0.35},      PowerLawCutoffParams{-0.75},
      QExpParams{1.25, 2.0},            QExpParams{1.6, 0.7},
      Weibull2Params{0.7, 1.1},         Weibull2Params{1.8, 0.6},
      Weibull3Params{0.9, 1.0, 0.25},
  };
  for (const auto& params : cases) {
    const double origin = riva::support_origin(params);
    for (int k = 1; k <= 50; ++k) {
      const double x = origin + 0.12 * k;
      const double integral = oracles::integrate_pdf_oracle(params, origin, x);
      CHECK(std::fabs(riva::cdf(params, x, 1.0) - integral) < 1e-6);
    }
  }
}

TEST_CASE("pdf agrees with the cdf derivative away from the origin") {
  const std::vector<DistParams> cases = {
      StretchedExpParams{1.3},
      PowerLawCutoffParams{-0.5},
      QExpParams{1.3, 2.5},
      Weibull2Params{1.4, 1.0},
      Weibull3Params{1.1, 1.0, 0.2},
  };
  for (const auto& params : cases) {
    const double origin = riva::support_origin(params);
    for (double x : {0.4, 0.9, 1.7, 3.1}) {
      const double xx = origin + x;
      const double h = 1e-6 * std::max(1.0, xx);
      const double derivative =
          (riva::cdf(params, xx + h, 1.0) - riva::cdf(params, xx - h, 1.0)) / (2.0 * h);
      const double density = riva::pdf(params, xx, 1.0);
      CHECK(std::fabs(derivative - density) <= 1e-4 * std::max(1.0, density));
    }
  }
}

TEST_CASE("survival complements the cdf") {
  riva::SplitMix64 rng(37);
  const std::vector<DistParams> cases = {
      StretchedExpParams{0.9},
      PowerLawCutoffParams{-0.6},
      QExpParams{1.45, 1.2},
      Weibull2Params{1.1, 1.3},
  };
  for (const auto& params : cases) {
    for (int i = 0; i < 25; ++i) {
      const double x = 8.0 * rng.next_double();
      CHECK(riva::cdf(params, x, 1.0) + riva::survival(params, x, 1.0) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("parameter domains are enforced") {
  CHECK_THROWS_AS(riva::pdf(StretchedExpParams{0.0}, 1.0, 1.0), riva::Error);
  CHECK_THROWS_AS(riva::pdf(PowerLawCutoffParams{0.2}, 1.0, 1.0), riva::Error);
  CHECK_THROWS_AS(riva::pdf(PowerLawCutoffParams{-1.0}, 1.0, 1.0), riva::Error);
  CHECK_THROWS_AS(riva::pdf(QExpParams{2.0, 1.0}, 1.0, 1.0), riva::Error);
  CHECK_THROWS_AS(riva::pdf(QExpParams{1.3, 0.0}, 1.0, 1.0), riva::Error);
  CHECK_THROWS_AS(riva::pdf(Weibull3Params{1.0, 1.0, 0.5}, 0.4, 1.0), riva::Error);
}
