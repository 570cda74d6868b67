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

#include "riva/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>

#include <json.hpp>

#include "riva/error.hpp"
#include "riva/special_functions.hpp"

namespace riva {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_fittable(const ScaledSample& s, const FitOptions& options) {
  if (s.n() < options.min_n) {
    fail(errc::insufficient_data, "sample size " + std::to_string(s.n()) +
                                      " below minimum " + std::to_string(options.min_n));
  }
  if (s.x.front() == s.x.back()) {
    fail(errc::degenerate_sample, "all intervals equal; distribution fit is ill-posed");
  }
}

}  // namespace

ScaledSample make_scaled_sample(std::span<const double> values) {
  if (values.empty()) fail(errc::insufficient_data, "empty interval sample");
  ScaledSample s;
  s.x.assign(values.begin(), values.end());
  std::sort(s.x.begin(), s.x.end());
  if (!(s.x.front() > 0.0) || !std::isfinite(s.x.back())) {
    fail(errc::invalid_params, "scaled intervals must be positive and finite");
  }
  s.log_x.reserve(s.x.size());
  for (double v : s.x) {
    const double lv = std::log(v);
    s.log_x.push_back(lv);
    s.sum_x += v;
    s.sum_log_x += lv;
  }
  return s;
}

double stretched_exp_loglik(double mu, const ScaledSample& sample) {
  const double n = static_cast<double>(sample.n());
  const double lg1 = std::lgamma(1.0 / mu);
  const double lg2 = std::lgamma(2.0 / mu);
  const double ln_a = std::log(mu) + lg2 - 2.0 * lg1;
  const double ln_b = lg2 - lg1;
  double sum_pow = 0.0;
  for (double lx : sample.log_x) sum_pow += std::exp(mu * lx);
  return n * ln_a - std::exp(mu * ln_b) * sum_pow;
}

double powerlaw_cutoff_loglik(double gamma, const ScaledSample& sample) {
  const double n = static_cast<double>(sample.n());
  const double alpha = -gamma;
  const double ln_c = alpha * std::log(alpha) - std::lgamma(alpha);
  return n * ln_c + (alpha - 1.0) * sample.sum_log_x - alpha * sample.sum_x;
}

double qexp_loglik(double q, double lambda_x, const ScaledSample& sample) {
  const double n = static_cast<double>(sample.n());
  const double a = (q - 1.0) * lambda_x;
  double acc = 0.0;
  for (double x : sample.x) acc += std::log1p(a * x);
  return n * (std::log(2.0 - q) + std::log(lambda_x)) - acc / (q - 1.0);
}

double weibull3_loglik(double zeta, double d_x, double x0, const ScaledSample& sample) {
  const double n = static_cast<double>(sample.n());
  const double ld = std::log(d_x);
  double sum_log_y = 0.0;
  double sum_pow = 0.0;
  for (double x : sample.x) {
    const double y = x - x0;
    if (!(y > 0.0)) return kNegInf;
    const double ly = std::log(y);
    sum_log_y += ly;
    sum_pow += std::exp(zeta * (ly - ld));
  }
  return n * (std::log(zeta) - zeta * ld) + (zeta - 1.0) * sum_log_y - sum_pow;
}

double weibull2_loglik(double zeta, double d_x, const ScaledSample& sample) {
  return weibull3_loglik(zeta, d_x, 0.0, sample);
}

std::string_view diagnostic_name(FitDiagnostic d) {
  switch (d) {
    case FitDiagnostic::exponential_boundary: return "ExponentialBoundary";
    case FitDiagnostic::lambda_at_bound: return "LambdaAtBound";
  }
  return "Unknown";
}

namespace {

// ---------------------------------------------------------------------------
// One-parameter staged search on the 1e-6 lattice.
//
// Stage strides are 1e4, 1e2, 1 with a +/-2-coarse-cell bracket, so the
// final stage resolves single lattice steps. Every abscissa is produced
// by the shared grid helpers, which makes the staged result comparable
// double-for-double with an exhaustive lattice scan.
// ---------------------------------------------------------------------------

struct Staged1D {
  std::int64_t idx = -1;
  double lnl = kNegInf;
  std::vector<double> stage_best;
};

template <class Eval>
Staged1D staged_search_1d(Eval&& eval, std::int64_t idx_min, std::int64_t idx_max) {
  constexpr std::int64_t kStrides[3] = {10000, 100, 1};
  Staged1D out;
  for (int stage = 0; stage < 3; ++stage) {
    const std::int64_t stride = kStrides[stage];
    std::int64_t lo = idx_min;
    std::int64_t hi = idx_max;
    if (stage > 0) {
      lo = std::max(idx_min, out.idx - 2 * kStrides[stage - 1]);
      hi = std::min(idx_max, out.idx + 2 * kStrides[stage - 1]);
    }
    std::int64_t start = ((lo + stride - 1) / stride) * stride;
    if (start < lo) start = lo;
    for (std::int64_t i = start; i <= hi; i += stride) {
      const double v = eval(i);
      if (v > out.lnl) {
        out.lnl = v;
        out.idx = i;
      }
    }
    out.stage_best.push_back(out.lnl);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multi-parameter coordinate machinery on the 1e-5 lattice.
// ---------------------------------------------------------------------------

constexpr double kStep = grid::kMultiParamStep;

struct Coord {
  double origin = 0.0;
  std::int64_t lo = 1;
  std::int64_t hi = 1;
  std::int64_t idx = 1;

  double value() const { return origin + static_cast<double>(idx) * kStep; }
  double value_at(std::int64_t i) const { return origin + static_cast<double>(i) * kStep; }
  std::int64_t snap(double v) const {
    std::int64_t i = std::llround((v - origin) / kStep);
    return std::clamp(i, lo, hi);
  }
};

std::int64_t stride_for_halfwidth(double halfwidth) {
  std::int64_t stride = 1;
  while (static_cast<double>(stride) * 20.0 * kStep < halfwidth && stride < (1LL << 40)) {
    stride *= 10;
  }
  return stride;
}

// Scans +/-20 strides around the current index, then descends the
// stride ladder by factors of ten down to single lattice steps. Each
// scan includes the incumbent's lattice neighbours, so the running best
// can only improve.
template <class Eval>
double refine_coord(Coord& c, Eval&& eval, double best_lnl, std::int64_t start_stride) {
  for (std::int64_t stride = start_stride;; stride = std::max<std::int64_t>(stride / 10, 1)) {
    const std::int64_t base = c.idx;
    std::int64_t best_i = base;
    for (int j = -20; j <= 20; ++j) {
      if (j == 0) continue;
      const std::int64_t i = base + j * stride;
      if (i < c.lo || i > c.hi) continue;
      const double v = eval(i);
      if (v > best_lnl) {
        best_lnl = v;
        best_i = i;
      }
    }
    c.idx = best_i;
    if (stride == 1) break;
  }
  return best_lnl;
}

// The 61-point log-spaced scale grid 1e-3 .. 1e+3 used by coarse stages.
std::vector<std::int64_t> log_scale_indices(const Coord& c) {
  std::vector<std::int64_t> idx;
  idx.reserve(61);
  for (int j = 0; j <= 60; ++j) {
    const double v = std::pow(10.0, -3.0 + 0.1 * j);
    const std::int64_t i = c.snap(v);
    if (idx.empty() || idx.back() != i) idx.push_back(i);
  }
  return idx;
}

}  // namespace

FitResult fit_stretched_exp(const ScaledSample& sample, const FitOptions& options) {
  require_fittable(sample, options);
  auto r = staged_search_1d(
      [&](std::int64_t i) { return stretched_exp_loglik(grid::stretched_exp_mu(i), sample); }, 1,
      grid::kStretchedExpMaxIdx);
  FitResult out;
  out.params = StretchedExpParams{grid::stretched_exp_mu(r.idx)};
  out.log_likelihood = r.lnl;
  out.stage_best_loglik = std::move(r.stage_best);
  return out;
}

FitResult fit_powerlaw_cutoff(const ScaledSample& sample, const FitOptions& options) {
  require_fittable(sample, options);
  auto r = staged_search_1d(
      [&](std::int64_t i) { return powerlaw_cutoff_loglik(grid::powerlaw_gamma(i), sample); }, 1,
      grid::kPowerLawMaxIdx);
  FitResult out;
  out.params = PowerLawCutoffParams{grid::powerlaw_gamma(r.idx)};
  out.log_likelihood = r.lnl;
  out.stage_best_loglik = std::move(r.stage_best);
  return out;
}

FitResult fit_qexp(const ScaledSample& sample, const FitOptions& options) {
  require_fittable(sample, options);

  Coord qc{1.0, 1, 99999, 1};
  Coord lc{0.0, 1, std::max<std::int64_t>(1, std::llround(options.lambda_x_max / kStep)), 1};

  const auto lam_grid = log_scale_indices(lc);
  double best = kNegInf;

  // Coarse 2-D stage: q in steps of 2e-2 against the log-spaced lambda grid.
  for (std::int64_t qi = 2000; qi <= 98000; qi += 2000) {
    const double q = qc.value_at(qi);
    for (std::int64_t li : lam_grid) {
      const double v = qexp_loglik(q, lc.value_at(li), sample);
      if (v > best) {
        best = v;
        qc.idx = qi;
        lc.idx = li;
      }
    }
  }

  FitResult out;
  out.stage_best_loglik.push_back(best);

  auto eval_q = [&](std::int64_t i) { return qexp_loglik(qc.value_at(i), lc.value(), sample); };
  auto eval_l = [&](std::int64_t i) { return qexp_loglik(qc.value(), lc.value_at(i), sample); };

  // Alternate coordinate passes until neither improves; the (q, lambda)
  // likelihood ridge is strongly correlated and needs the extra rounds.
  for (int round = 0; round < 40; ++round) {
    const double before = best;
    best = refine_coord(qc, eval_q, best, round == 0 ? 1000 : 100);
    const double lam = lc.value();
    const double halfwidth = round == 0 ? 0.3 * lam : 0.02 * lam;
    best = refine_coord(lc, eval_l, best, stride_for_halfwidth(halfwidth));
    out.stage_best_loglik.push_back(best);
    if (!(best > before)) break;
  }

  // Joint polish: hill-climb the 8 lattice neighbours.
  for (int iter = 0; iter < 2000; ++iter) {
    std::int64_t bq = qc.idx, bl = lc.idx;
    bool moved = false;
    for (int dq = -1; dq <= 1; ++dq) {
      for (int dl = -1; dl <= 1; ++dl) {
        if (dq == 0 && dl == 0) continue;
        const std::int64_t qi = qc.idx + dq;
        const std::int64_t li = lc.idx + dl;
        if (qi < qc.lo || qi > qc.hi || li < lc.lo || li > lc.hi) continue;
        const double v = qexp_loglik(qc.value_at(qi), lc.value_at(li), sample);
        if (v > best) {
          best = v;
          bq = qi;
          bl = li;
          moved = true;
        }
      }
    }
    qc.idx = bq;
    lc.idx = bl;
    if (!moved) break;
  }
  out.stage_best_loglik.push_back(best);

  out.params = QExpParams{qc.value(), lc.value()};
  out.log_likelihood = best;
  if (qc.idx == qc.lo) out.diagnostics.push_back(FitDiagnostic::exponential_boundary);
  if (lc.idx == lc.hi) out.diagnostics.push_back(FitDiagnostic::lambda_at_bound);
  return out;
}

FitResult fit_weibull2(const ScaledSample& sample, const FitOptions& options) {
  require_fittable(sample, options);

  Coord zc{0.0, 1, 1000000, 1};  // zeta in (0, 10]
  Coord dc{0.0, 1, std::max<std::int64_t>(1, std::llround(options.lambda_x_max / kStep)), 1};

  const auto d_grid = log_scale_indices(dc);
  const double n = static_cast<double>(sample.n());

  // Coarse stage with the zeta-wise power sum hoisted; cheap rearranged
  // evaluations locate the bracket, the exact evaluator scores it.
  double best_coarse = kNegInf;
  for (std::int64_t zi = 10000; zi <= 1000000; zi += 10000) {
    const double zeta = zc.value_at(zi);
    double t = 0.0;
    for (double lx : sample.log_x) t += std::exp(zeta * lx);
    for (std::int64_t di : d_grid) {
      const double ld = std::log(dc.value_at(di));
      const double v =
          n * (std::log(zeta) - zeta * ld) + (zeta - 1.0) * sample.sum_log_x - t * std::exp(-zeta * ld);
      if (v > best_coarse) {
        best_coarse = v;
        zc.idx = zi;
        dc.idx = di;
      }
    }
  }

  double best = weibull2_loglik(zc.value(), dc.value(), sample);
  FitResult out;
  out.stage_best_loglik.push_back(best);

  auto eval_z = [&](std::int64_t i) { return weibull2_loglik(zc.value_at(i), dc.value(), sample); };
  auto eval_d = [&](std::int64_t i) { return weibull2_loglik(zc.value(), dc.value_at(i), sample); };

  for (int round = 0; round < 40; ++round) {
    const double before = best;
    best = refine_coord(zc, eval_z, best, round == 0 ? 1000 : 100);
    const double d = dc.value();
    best = refine_coord(dc, eval_d, best, stride_for_halfwidth(round == 0 ? 0.3 * d : 0.02 * d));
    out.stage_best_loglik.push_back(best);
    if (!(best > before)) break;
  }

  for (int iter = 0; iter < 2000; ++iter) {
    std::int64_t bz = zc.idx, bd = dc.idx;
    bool moved = false;
    for (int dz = -1; dz <= 1; ++dz) {
      for (int dd = -1; dd <= 1; ++dd) {
        if (dz == 0 && dd == 0) continue;
        const std::int64_t zi = zc.idx + dz;
        const std::int64_t di = dc.idx + dd;
        if (zi < zc.lo || zi > zc.hi || di < dc.lo || di > dc.hi) continue;
        const double v = weibull2_loglik(zc.value_at(zi), dc.value_at(di), sample);
        if (v > best) {
          best = v;
          bz = zi;
          bd = di;
          moved = true;
        }
      }
    }
    zc.idx = bz;
    dc.idx = bd;
    if (!moved) break;
  }
  out.stage_best_loglik.push_back(best);

  out.params = Weibull2Params{zc.value(), dc.value()};
  out.log_likelihood = best;
  return out;
}

FitResult fit_weibull3(const ScaledSample& sample, const FitOptions& options) {
  require_fittable(sample, options);

  const double x0_max = sample.min_x() * (1.0 - 1e-9);
  Coord zc{0.0, 1, 1000000, 1};
  Coord dc{0.0, 1, std::max<std::int64_t>(1, std::llround(options.lambda_x_max / kStep)), 1};
  Coord oc{0.0, 0, std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(x0_max / kStep))), 0};

  const double n = static_cast<double>(sample.n());

  // The two-parameter fit doubles as the x0 = 0 candidate; keeping it in
  // the pool guarantees the nested family is never beaten by its parent.
  const FitResult w2 = fit_weibull2(sample, options);
  const auto& w2p = std::get<Weibull2Params>(w2.params);

  // Coarse sweep: 13 shifts, profiled scale per (x0, zeta).
  double best_prof = kNegInf;
  std::int64_t best_zi = zc.snap(w2p.zeta), best_oi = 0;
  double best_d = w2p.d_x;
  for (int j = 0; j <= 12; ++j) {
    const std::int64_t oi = oc.lo + (oc.hi - oc.lo) * j / 12;
    if (j > 0 && oi == oc.lo) continue;
    const double x0 = oc.value_at(oi);
    double sum_log_y = 0.0;
    std::vector<double> log_y;
    log_y.reserve(sample.n());
    for (double x : sample.x) {
      const double ly = std::log(x - x0);
      log_y.push_back(ly);
      sum_log_y += ly;
    }
    for (std::int64_t zi = 10000; zi <= 1000000; zi += 20000) {
      const double zeta = zc.value_at(zi);
      double t = 0.0;
      for (double ly : log_y) t += std::exp(zeta * ly);
      const double ld_hat = std::log(t / n) / zeta;
      const double v = n * (std::log(zeta) - zeta * ld_hat) + (zeta - 1.0) * sum_log_y - n;
      if (v > best_prof) {
        best_prof = v;
        best_zi = zi;
        best_oi = oi;
        best_d = std::exp(ld_hat);
      }
    }
  }

  zc.idx = best_zi;
  dc.idx = dc.snap(best_d);
  oc.idx = best_oi;
  double best = weibull3_loglik(zc.value(), dc.value(), oc.value(), sample);
  if (w2.log_likelihood > best) {
    zc.idx = zc.snap(w2p.zeta);
    dc.idx = dc.snap(w2p.d_x);
    oc.idx = 0;
    best = weibull3_loglik(zc.value(), dc.value(), 0.0, sample);
  }

  FitResult out;
  out.stage_best_loglik.push_back(best);

  auto eval_z = [&](std::int64_t i) {
    return weibull3_loglik(zc.value_at(i), dc.value(), oc.value(), sample);
  };
  auto eval_d = [&](std::int64_t i) {
    return weibull3_loglik(zc.value(), dc.value_at(i), oc.value(), sample);
  };
  auto eval_o = [&](std::int64_t i) {
    return weibull3_loglik(zc.value(), dc.value(), oc.value_at(i), sample);
  };

  const double o_cell = std::max(x0_max / 12.0, kStep);
  for (int round = 0; round < 40; ++round) {
    const double before = best;
    best = refine_coord(zc, eval_z, best, round == 0 ? 1000 : 100);
    const double d = dc.value();
    best = refine_coord(dc, eval_d, best, stride_for_halfwidth(round == 0 ? 0.3 * d : 0.02 * d));
    if (oc.hi > oc.lo) {
      best = refine_coord(oc, eval_o, best, stride_for_halfwidth(round == 0 ? o_cell : 0.02 * o_cell));
    }
    out.stage_best_loglik.push_back(best);
    if (!(best > before)) break;
  }

  for (int iter = 0; iter < 2000; ++iter) {
    std::int64_t bz = zc.idx, bd = dc.idx, bo = oc.idx;
    bool moved = false;
    const std::int64_t deltas[3] = {-1, 0, 1};
    for (std::int64_t dz : deltas) {
      for (std::int64_t dd : deltas) {
        for (std::int64_t dxo : deltas) {
          if (dz == 0 && dd == 0 && dxo == 0) continue;
          const std::int64_t zi = zc.idx + dz;
          const std::int64_t di = dc.idx + dd;
          const std::int64_t oi = oc.idx + dxo;
          if (zi < zc.lo || zi > zc.hi || di < dc.lo || di > dc.hi || oi < oc.lo || oi > oc.hi) {
            continue;
          }
          const double v = weibull3_loglik(zc.value_at(zi), dc.value_at(di), oc.value_at(oi), sample);
          if (v > best) {
            best = v;
            bz = zi;
            bd = di;
            bo = oi;
            moved = true;
          }
        }
      }
    }
    zc.idx = bz;
    dc.idx = bd;
    oc.idx = bo;
    if (!moved) break;
  }
  out.stage_best_loglik.push_back(best);

  out.params = Weibull3Params{zc.value(), dc.value(), oc.value()};
  out.log_likelihood = best;
  return out;
}

double ks_statistic(const ScaledSample& sample, const DistParams& params, double tau_q) {
  validate_params(params);
  const double n = static_cast<double>(sample.n());
  double ks = 0.0;
  std::size_t i = 0;
  while (i < sample.n()) {
    std::size_t j = i;
    while (j < sample.n() && sample.x[j] == sample.x[i]) ++j;
    const double f = cdf(params, sample.x[i], tau_q);
    const double below = static_cast<double>(i) / n;   // F_emp(x-)
    const double at = static_cast<double>(j) / n;      // F_emp(x)
    ks = std::max({ks, std::fabs(below - f), std::fabs(at - f)});
    i = j;
  }
  return ks;
}

namespace {

struct FamilyOutcome {
  bool ok = false;
  DistributionFit fit;
  std::string error;
};

FamilyOutcome run_family(DistFamily family, const ScaledSample& sample, double tau_q,
                         const FitOptions& options) {
  FamilyOutcome out;
  try {
    FitResult r;
    switch (family) {
      case DistFamily::stretched_exp: r = fit_stretched_exp(sample, options); break;
      case DistFamily::powerlaw_cutoff: r = fit_powerlaw_cutoff(sample, options); break;
      case DistFamily::q_exp: r = fit_qexp(sample, options); break;
      case DistFamily::weibull2: r = fit_weibull2(sample, options); break;
      case DistFamily::weibull3: r = fit_weibull3(sample, options); break;
    }
    out.fit = DistributionFit{family,      r.params, r.log_likelihood,
                              ks_statistic(sample, r.params, tau_q), sample.n(), tau_q,
                              r.diagnostics};
    out.ok = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

RankedFits fit_all_and_rank(const ScaledSample& sample, double tau_q, const FitOptions& options) {
  constexpr DistFamily kFamilies[5] = {DistFamily::stretched_exp, DistFamily::powerlaw_cutoff,
                                       DistFamily::q_exp, DistFamily::weibull2,
                                       DistFamily::weibull3};
  std::vector<FamilyOutcome> outcomes(5);
  if (options.concurrent) {
    std::vector<std::future<FamilyOutcome>> futures;
    futures.reserve(5);
    for (DistFamily f : kFamilies) {
      futures.push_back(std::async(std::launch::async, run_family, f, std::cref(sample), tau_q,
                                   std::cref(options)));
    }
    for (int i = 0; i < 5; ++i) outcomes[static_cast<std::size_t>(i)] = futures[static_cast<std::size_t>(i)].get();
  } else {
    for (int i = 0; i < 5; ++i) outcomes[static_cast<std::size_t>(i)] = run_family(kFamilies[i], sample, tau_q, options);
  }

  RankedFits ranked;
  for (int i = 0; i < 5; ++i) {
    auto& o = outcomes[static_cast<std::size_t>(i)];
    if (o.ok) {
      ranked.fits.push_back(std::move(o.fit));
    } else {
      ranked.failures.emplace_back(kFamilies[i], o.error);
    }
  }
  if (ranked.fits.empty()) {
    fail(errc::all_fits_failed, "all five candidate families failed to fit");
  }
  std::stable_sort(ranked.fits.begin(), ranked.fits.end(),
                   [](const DistributionFit& a, const DistributionFit& b) { return a.ks < b.ks; });
  return ranked;
}

std::string fit_to_json(const DistributionFit& fit) {
  nlohmann::json params;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StretchedExpParams>) {
          params["mu"] = p.mu;
        } else if constexpr (std::is_same_v<T, PowerLawCutoffParams>) {
          params["gamma"] = p.gamma;
        } else if constexpr (std::is_same_v<T, QExpParams>) {
          params["q"] = p.q;
          params["lambda_x"] = p.lambda_x;
        } else if constexpr (std::is_same_v<T, Weibull2Params>) {
          params["zeta"] = p.zeta;
          params["d_x"] = p.d_x;
        } else {
          params["zeta"] = p.zeta;
          params["d_x"] = p.d_x;
          params["x0"] = p.x0;
        }
      },
      fit.params);

  nlohmann::json j;
  j["family"] = std::string(family_name(fit.family));
  j["params"] = params;
  j["log_likelihood"] = fit.log_likelihood;
  j["ks"] = fit.ks;
  j["n"] = fit.n;
  j["tau_q"] = fit.tau_q;
  if (!fit.diagnostics.empty()) {
    nlohmann::json diags = nlohmann::json::array();
    for (auto d : fit.diagnostics) diags.push_back(std::string(diagnostic_name(d)));
    j["diagnostics"] = diags;
  }
  return j.dump();
}

}  // namespace riva
