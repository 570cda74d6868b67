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

namespace riva {

// Gamma function on the positive half line. Relative accuracy is a few
// ulp on (0, 30], far inside the 1e-10 budget the fitters need.
double gamma_fn(double z);

// ln Gamma(z) for z > 0. Used wherever Gamma ratios would overflow.
double log_gamma_fn(double z);

// Regularized incomplete gamma functions,
//   P(a, x) = gamma(a, x) / Gamma(a),  Q(a, x) = 1 - P(a, x),
// computed by the power series (x < a + 1) or the Lentz continued
// fraction (x >= a + 1). Relative accuracy ~1e-14.
double reg_lower_gamma(double a, double x);
double reg_upper_gamma(double a, double x);

}  // namespace riva
