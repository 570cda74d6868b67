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

// riva CLI: wires the pipeline end to end. Stages exchange canonical
// CSV files inside --out-dir; `report` runs everything and aggregates a
// single deterministic JSON document.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riva/error.hpp"
#include "riva/fitting.hpp"
#include "riva/hazard.hpp"
#include "riva/predictor.hpp"
#include "riva/recurrence.hpp"
#include "riva/rolling.hpp"
#include "riva/synthetic.hpp"
#include "riva/table.hpp"
#include "riva/version.hpp"
#include "riva/volatility.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

int exit_code_for(riva::errc code) {
  switch (code) {
    case riva::errc::invalid_config:
      return kExitConfig;
    case riva::errc::invalid_params:
    case riva::errc::numeric_failure:
    case riva::errc::degenerate_sample:
    case riva::errc::all_fits_failed:
      return kExitNumeric;
    default:
      return kExitData;
  }
}

struct RunConfig {
  std::vector<std::string> inputs;
  std::string input;  // resolved per pipeline
  std::string out_dir = ".";
  std::int32_t slots_per_day = 242;
  std::vector<double> tau_list = {20, 25, 40, 60, 80, 100};
  std::vector<double> delta_ts = {1};
  double split = 0.7;
  bool in_sample = false;
  bool cross_day = false;
  bool raw_input = false;
  bool events_input = false;
  std::size_t min_intervals = 100;
  std::int64_t window_len = 242LL * 21 * 48;  // 48 months of 21 trading days
  std::int64_t window_step = 242LL * 21;
  int window_months = 0;  // when set, overrides window_len via the month mapping
  int step_months = 0;
  int days_per_month = 21;
  int min_months = 0;          // rolling history filter; 0 disables
  bool drop_first_month = false;  // rolling IPO filter
  std::string pattern_scope = "per-window";
  std::string qp_grid = "auto";
  std::uint64_t seed = 1;
  // simulate
  std::string kind = "clustered";
  std::int64_t n = 100000;
  double gen_q = 1.3;
  double gen_lambda = 0.0025;
  double gen_rate = 0.01;
  double gen_zeta = 1.0;
  double gen_d = 100.0;
  double level_ratio = 5.0;
  double stay_calm = 0.99;
  double stay_turbulent = 0.99;
};

void validate_common(RunConfig& cfg) {
  if (cfg.slots_per_day <= 0) riva::fail(riva::errc::invalid_config, "slots-per-day must be positive");
  if (!(cfg.split > 0.0) || !(cfg.split < 1.0)) {
    riva::fail(riva::errc::invalid_config, "split must lie strictly between 0 and 1");
  }
  if (cfg.tau_list.empty()) riva::fail(riva::errc::invalid_config, "tau list must not be empty");
  for (double tau : cfg.tau_list) {
    if (!(tau > 1.0)) riva::fail(riva::errc::invalid_config, "every tau must exceed 1");
  }
  for (double dt : cfg.delta_ts) {
    if (!(dt >= 1.0)) riva::fail(riva::errc::invalid_config, "every delta-t must be >= 1 slot");
  }
  if (cfg.days_per_month <= 0) {
    riva::fail(riva::errc::invalid_config, "days-per-month must be positive");
  }
  // Calendar convenience: months map to slots via slots_per_day * days_per_month.
  const std::int64_t month = static_cast<std::int64_t>(cfg.slots_per_day) * cfg.days_per_month;
  if (cfg.window_months > 0) cfg.window_len = cfg.window_months * month;
  if (cfg.step_months > 0) cfg.window_step = cfg.step_months * month;
}

json config_echo(const RunConfig& cfg) {
  json j;
  j["input"] = cfg.input;
  j["out_dir"] = cfg.out_dir;
  j["slots_per_day"] = cfg.slots_per_day;
  j["tau_list"] = cfg.tau_list;
  j["delta_t"] = cfg.delta_ts;
  j["split"] = cfg.split;
  j["in_sample"] = cfg.in_sample;
  j["cross_day"] = cfg.cross_day;
  j["raw_input"] = cfg.raw_input;
  j["min_intervals"] = cfg.min_intervals;
  j["window_len"] = cfg.window_len;
  j["window_step"] = cfg.window_step;
  j["pattern_scope"] = cfg.pattern_scope;
  j["q_p_grid"] = cfg.qp_grid;
  j["seed"] = cfg.seed;
  return j;
}

void write_json(const fs::path& path, const json& j) {
  riva::write_text_atomic(path, j.dump(2) + "\n");
}

std::string tau_label(double tau) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", tau);
  return buf;
}

// --- canonical series files -------------------------------------------------

riva::Table series_to_table(const riva::VolatilitySeries& v) {
  riva::Table table;
  table.columns = {"day", "slot", "value"};
  table.rows.reserve(v.points.size());
  for (const auto& p : v.points) {
    table.rows.push_back({static_cast<double>(p.day), static_cast<double>(p.slot), p.value});
  }
  return table;
}

riva::VolatilitySeries series_from_table(const riva::Table& table, std::int32_t slots_per_day,
                                         riva::VolStage stage) {
  int day_col = 0, slot_col = 1, value_col = 2;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (table.columns[c] == "day") day_col = static_cast<int>(c);
    if (table.columns[c] == "slot") slot_col = static_cast<int>(c);
    if (table.columns[c] == "value") value_col = static_cast<int>(c);
  }
  riva::VolatilitySeries v;
  v.stage = stage;
  v.slots_per_day = slots_per_day;
  v.points.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    v.points.push_back({static_cast<std::int64_t>(row[static_cast<std::size_t>(day_col)]),
                        static_cast<std::int32_t>(row[static_cast<std::size_t>(slot_col)]),
                        row[static_cast<std::size_t>(value_col)]});
  }
  return v;
}

riva::VolatilitySeries load_series(const RunConfig& cfg, riva::VolStage stage) {
  return series_from_table(riva::read_table(cfg.input), cfg.slots_per_day, stage);
}

// Loads the volatility input and brings it to the normalized stage,
// honouring --raw (full-series pattern unless a window is specified).
riva::VolatilitySeries load_normalized(const RunConfig& cfg) {
  if (!cfg.raw_input) return load_series(cfg, riva::VolStage::normalized);
  const auto raw = load_series(cfg, riva::VolStage::raw);
  return riva::normalize(riva::deseasonalize(raw, riva::intraday_pattern(raw)));
}

std::vector<double> parse_qp_grid(const std::string& text) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!item.empty()) {
      char* end = nullptr;
      const double v = std::strtod(item.c_str(), &end);
      if (end == item.c_str() || *end != '\0') {
        riva::fail(riva::errc::invalid_config, "cannot parse q-p-grid entry '" + item + "'");
      }
      grid.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (grid.empty()) riva::fail(riva::errc::invalid_config, "empty q-p-grid");
  return grid;
}

// --- stages ------------------------------------------------------------------

json run_preprocess(const RunConfig& cfg) {
  riva::PriceCsvSchema schema;
  schema.slots_per_day = cfg.slots_per_day;
  const auto prices = riva::load_price_csv(cfg.input, schema);
  const auto raw = riva::log_abs_returns(prices, cfg.cross_day);
  const auto pattern = riva::intraday_pattern(raw);
  const auto normalized = riva::normalize(riva::deseasonalize(raw, pattern));

  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  riva::write_table(dir / "volatility_raw.csv", series_to_table(raw));
  riva::write_table(dir / "volatility.csv", series_to_table(normalized));

  riva::Table pattern_table;
  pattern_table.columns = {"slot", "level", "days_seen"};
  for (std::size_t s = 0; s < pattern.level.size(); ++s) {
    pattern_table.rows.push_back({static_cast<double>(s), pattern.level[s],
                                  static_cast<double>(pattern.days_seen[s])});
  }
  riva::write_table(dir / "pattern.csv", pattern_table);

  json j;
  j["stage"] = "preprocess";
  j["records"] = prices.records.size();
  j["volatility_points"] = normalized.points.size();
  j["cross_day"] = cfg.cross_day;
  j["outputs"] = {"volatility_raw.csv", "volatility.csv", "pattern.csv"};
  return j;
}

json run_intervals(const RunConfig& cfg) {
  const auto v = load_normalized(cfg);
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  json summary = json::array();
  for (double tau : cfg.tau_list) {
    const double q_threshold = riva::threshold_for_mean_interval(v, tau);
    const auto sample = riva::extract_intervals(v, q_threshold, tau);
    riva::Table table;
    table.columns = {"raw", "scaled"};
    for (std::size_t i = 0; i < sample.n(); ++i) {
      table.rows.push_back({static_cast<double>(sample.raw[i]), sample.scaled[i]});
    }
    riva::write_table(dir / ("intervals_tau" + tau_label(tau) + ".csv"), table);

    const double mean_raw =
        static_cast<double>(std::accumulate(sample.raw.begin(), sample.raw.end(), std::int64_t{0})) /
        static_cast<double>(sample.n());
    json item;
    item["tau_q"] = tau;
    item["threshold_q"] = q_threshold;
    item["n"] = sample.n();
    item["mean_raw"] = mean_raw;
    summary.push_back(item);
  }
  json doc;
  doc["version"] = riva::kVersion;
  doc["config"] = config_echo(cfg);
  doc["results"] = summary;
  write_json(dir / "intervals.json", doc);

  json j;
  j["stage"] = "intervals";
  j["tau_count"] = cfg.tau_list.size();
  return j;
}

json fit_sample_all(const riva::IntervalSample& sample, const riva::FitOptions& options) {
  const auto ranked = riva::fit_all_and_rank(riva::make_scaled_sample(sample.scaled),
                                             sample.tau_q, options);
  json fits = json::array();
  for (const auto& fit : ranked.fits) fits.push_back(json::parse(riva::fit_to_json(fit)));
  json j;
  j["tau_q"] = sample.tau_q;
  j["threshold_q"] = sample.threshold_q;
  j["fits"] = fits;
  j["best_family"] = std::string(riva::family_name(ranked.fits.front().family));
  if (!ranked.failures.empty()) {
    json failures = json::array();
    for (const auto& f : ranked.failures) {
      failures.push_back({{"family", std::string(riva::family_name(f.first))},
                          {"error", f.second}});
    }
    j["failures"] = failures;
  }
  return j;
}

json run_fit(const RunConfig& cfg) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  riva::FitOptions options;
  options.min_n = cfg.min_intervals;

  json per_tau = json::array();
  if (cfg.events_input) {
    // Event-series input: the intervals are the gaps between events and
    // the scale is their mean.
    const auto v = load_series(cfg, riva::VolStage::normalized);
    riva::IntervalSample sample;
    std::int64_t last = -1;
    double sum = 0.0;
    for (std::size_t i = 0; i < v.points.size(); ++i) {
      if (v.points[i].value > 0.5) {
        if (last >= 0) {
          const std::int64_t tau = static_cast<std::int64_t>(i) - last;
          sample.raw.push_back(tau);
          sum += static_cast<double>(tau);
        }
        last = static_cast<std::int64_t>(i);
      }
    }
    if (sample.raw.size() < 2) {
      riva::fail(riva::errc::too_few_exceedances, "event series has fewer than 2 intervals");
    }
    sample.tau_q = sum / static_cast<double>(sample.raw.size());
    sample.threshold_q = 0.5;
    for (auto r : sample.raw) sample.scaled.push_back(static_cast<double>(r) / sample.tau_q);
    per_tau.push_back(fit_sample_all(sample, options));
  } else {
    const auto v = load_normalized(cfg);
    for (double tau : cfg.tau_list) {
      const double q_threshold = riva::threshold_for_mean_interval(v, tau);
      per_tau.push_back(fit_sample_all(riva::extract_intervals(v, q_threshold, tau), options));
    }
  }

  json doc;
  doc["version"] = riva::kVersion;
  doc["config"] = config_echo(cfg);
  doc["results"] = per_tau;
  doc["best_family"] = per_tau.front()["best_family"];
  write_json(dir / "fits.json", doc);

  json j;
  j["stage"] = "fit";
  j["best_family"] = doc["best_family"];
  return j;
}

json run_hazard(const RunConfig& cfg) {
  const auto v = load_normalized(cfg);
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  riva::FitOptions options;
  options.min_n = cfg.min_intervals;

  json summary = json::array();
  for (double tau : cfg.tau_list) {
    const double q_threshold = riva::threshold_for_mean_interval(v, tau);
    const auto sample = riva::extract_intervals(v, q_threshold, tau);
    const auto fit = riva::fit_qexp(riva::make_scaled_sample(sample.scaled), options);
    const auto params = std::get<riva::QExpParams>(fit.params);
    const double lambda_raw = params.lambda_x / tau;

    for (double dt : cfg.delta_ts) {
      const auto curve = riva::hazard_curve_qexp(params.q, lambda_raw, sample, dt, 20);
      riva::Table table;
      table.columns = {"t", "W_analytic", "W_empirical", "n_tail"};
      for (const auto& p : curve.points) {
        table.rows.push_back({p.t, p.w_analytic, p.w_empirical, static_cast<double>(p.n_tail)});
      }
      riva::write_table(dir / ("hazard_tau" + tau_label(tau) + "_dt" + tau_label(dt) + ".csv"),
                        table);
    }
    json item;
    item["tau_q"] = tau;
    item["q"] = params.q;
    item["lambda_x"] = params.lambda_x;
    summary.push_back(item);
  }

  json j;
  j["stage"] = "hazard";
  j["fits"] = summary;
  return j;
}

json run_predict(const RunConfig& cfg) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  riva::FitOptions options;
  options.min_n = cfg.min_intervals;
  const double tau = cfg.tau_list.front();

  riva::VolatilitySeries v;
  std::size_t split_idx = 0;
  if (cfg.raw_input) {
    // Out-of-sample discipline: the pattern and the normalization scale
    // come from the fit window only.
    const auto raw = load_series(cfg, riva::VolStage::raw);
    split_idx = cfg.in_sample
                    ? raw.points.size()
                    : static_cast<std::size_t>(cfg.split * static_cast<double>(raw.points.size()));
    riva::VolatilitySeries fit_window;
    fit_window.stage = riva::VolStage::raw;
    fit_window.slots_per_day = raw.slots_per_day;
    fit_window.points.assign(raw.points.begin(),
                             raw.points.begin() + static_cast<std::ptrdiff_t>(split_idx));
    const auto pattern = riva::intraday_pattern(fit_window);
    const auto deseasonalized = riva::deseasonalize(raw, pattern);
    std::vector<double> fit_values;
    fit_values.reserve(split_idx);
    for (std::size_t i = 0; i < split_idx; ++i) fit_values.push_back(deseasonalized.points[i].value);
    const double sigma = riva::population_std(fit_values);
    if (sigma <= 0.0) riva::fail(riva::errc::zero_variance, "fit window has zero variance");
    v = deseasonalized;
    v.stage = riva::VolStage::normalized;
    for (auto& p : v.points) p.value /= sigma;
  } else {
    v = load_series(cfg, riva::VolStage::normalized);
    split_idx = cfg.in_sample
                    ? v.points.size()
                    : static_cast<std::size_t>(cfg.split * static_cast<double>(v.points.size()));
  }

  riva::VolatilitySeries fit_v;
  fit_v.stage = riva::VolStage::normalized;
  fit_v.slots_per_day = v.slots_per_day;
  fit_v.points.assign(v.points.begin(), v.points.begin() + static_cast<std::ptrdiff_t>(split_idx));

  const double q_threshold = riva::threshold_for_mean_interval(fit_v, tau);
  const auto sample = riva::extract_intervals(fit_v, q_threshold, tau);
  const auto fit = riva::fit_qexp(riva::make_scaled_sample(sample.scaled), options);
  const auto params = std::get<riva::QExpParams>(fit.params);

  const auto events = riva::exceedance_events(v, q_threshold);
  const auto hs = riva::hazard_series(events, params.q, params.lambda_x / tau, cfg.delta_ts.front());

  std::vector<double> w_scored;
  std::vector<std::uint8_t> ev_scored;
  if (cfg.in_sample) {
    w_scored = hs.w;
    ev_scored.assign(events.begin(), events.end());
  } else {
    w_scored.assign(hs.w.begin() + static_cast<std::ptrdiff_t>(split_idx), hs.w.end());
    ev_scored.assign(events.begin() + static_cast<std::ptrdiff_t>(split_idx), events.end());
  }

  const std::vector<double> grid =
      cfg.qp_grid == "auto" ? riva::default_qp_grid(w_scored) : parse_qp_grid(cfg.qp_grid);
  const int delta_slots = static_cast<int>(cfg.delta_ts.front());
  const auto roc = riva::roc_curve(w_scored, ev_scored, grid, delta_slots);

  riva::Table table;
  table.columns = {"q_p", "a", "d"};
  for (const auto& p : roc.points) table.rows.push_back({p.q_p, p.a, p.d});
  riva::write_table(dir / "roc.csv", table);

  json summary;
  summary["version"] = riva::kVersion;
  summary["config"] = config_echo(cfg);
  summary["auc"] = roc.auc;
  json d_at;
  try {
    d_at["0.1"] = riva::d_at_false_alarm(roc, 0.1);
  } catch (const riva::Error&) {
    d_at["0.1"] = nullptr;  // grid too coarse to span A = 0.1
  }
  summary["d_at_a"] = d_at;
  summary["provenance"] = {
      {"mode", cfg.in_sample ? "in_sample" : "out_of_sample"},
      {"tau_q", tau},
      {"threshold_q", q_threshold},
      {"fitted", {{"q", params.q}, {"lambda_x", params.lambda_x}}},
      {"scored_slots", w_scored.size()},
  };
  write_json(dir / "predict_summary.json", summary);

  json j;
  j["stage"] = "predict";
  j["auc"] = roc.auc;
  j["d_at_a"] = d_at;
  j["mode"] = cfg.in_sample ? "in_sample" : "out_of_sample";
  return j;
}

json run_rolling(const RunConfig& cfg) {
  auto raw = load_series(cfg, riva::VolStage::raw);
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  // Data-curation filters from the rolling-analysis policy.
  const std::int64_t month = static_cast<std::int64_t>(cfg.slots_per_day) * cfg.days_per_month;
  if (cfg.min_months > 0 &&
      static_cast<std::int64_t>(raw.points.size()) < cfg.min_months * month) {
    riva::fail(riva::errc::insufficient_data,
               "history shorter than --min-months " + std::to_string(cfg.min_months));
  }
  if (cfg.drop_first_month) {
    const std::size_t drop = std::min(raw.points.size(), static_cast<std::size_t>(month));
    raw.points.erase(raw.points.begin(), raw.points.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  riva::WindowSpec spec{cfg.window_len, cfg.window_step, cfg.min_intervals};
  const auto scope = cfg.pattern_scope == "global" ? riva::PatternScope::global
                                                   : riva::PatternScope::per_window;
  const auto trajectory = riva::rolling_fit(raw, cfg.tau_list, spec, scope);

  // Absent entries serialize as empty cells, so the table is written by
  // hand rather than through write_table.
  std::string text = "window_end,q_mean";
  for (double tau : cfg.tau_list) text += ",lambda_x_tau" + tau_label(tau);
  text += '\n';
  char buf[40];
  for (const auto& p : trajectory.points) {
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(p.window_end));
    text += buf;
    if (p.q_mean) {
      std::snprintf(buf, sizeof(buf), ",%.17g", *p.q_mean);
      text += buf;
    } else {
      text += ',';
    }
    for (const auto& lx : p.lambda_x) {
      if (lx) {
        std::snprintf(buf, sizeof(buf), ",%.17g", *lx);
        text += buf;
      } else {
        text += ',';
      }
    }
    text += '\n';
  }
  riva::write_text_atomic(dir / "trajectory.csv", text);

  json j;
  j["stage"] = "rolling";
  j["windows"] = trajectory.points.size();
  j["pattern_scope"] = cfg.pattern_scope;
  return j;
}

json run_simulate(const RunConfig& cfg) {
  riva::GeneratorSpec spec;
  spec.n = cfg.n;
  spec.seed = cfg.seed;
  spec.slots_per_day = cfg.slots_per_day;

  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  json j;
  j["stage"] = "simulate";
  j["kind"] = cfg.kind;
  j["seed"] = cfg.seed;
  if (cfg.kind == "clustered") {
    spec.model = riva::ClusteredVolatilitySpec{cfg.level_ratio, cfg.stay_calm, cfg.stay_turbulent};
    const auto v = riva::clustered_volatility(spec);
    riva::write_table(dir / "simulated.csv", series_to_table(v));
    j["output"] = "simulated.csv";
    j["points"] = v.points.size();
    return j;
  }

  if (cfg.kind == "qexp") {
    spec.model = riva::QExpRenewalSpec{cfg.gen_q, cfg.gen_lambda};
  } else if (cfg.kind == "exponential") {
    spec.model = riva::ExponentialRenewalSpec{cfg.gen_rate};
  } else if (cfg.kind == "weibull") {
    spec.model = riva::Weibull2RenewalSpec{cfg.gen_zeta, cfg.gen_d};
  } else {
    riva::fail(riva::errc::invalid_config, "unknown --kind '" + cfg.kind + "'");
  }
  const auto events = riva::renewal_event_series(spec);
  riva::Table table;
  table.columns = {"day", "slot", "value"};
  for (std::size_t i = 0; i < events.size(); ++i) {
    table.rows.push_back({static_cast<double>(static_cast<std::int64_t>(i) / cfg.slots_per_day),
                          static_cast<double>(static_cast<std::int64_t>(i) % cfg.slots_per_day),
                          static_cast<double>(events[i])});
  }
  riva::write_table(dir / "simulated.csv", table);
  j["output"] = "simulated.csv";
  j["events"] = std::accumulate(events.begin(), events.end(), std::int64_t{0});
  return j;
}

json run_report(RunConfig cfg) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  json report;
  report["version"] = riva::kVersion;
  report["config"] = config_echo(cfg);
  report["stages"] = json::object();

  report["stages"]["preprocess"] = run_preprocess(cfg);

  RunConfig vol_cfg = cfg;
  vol_cfg.input = (dir / "volatility.csv").string();
  vol_cfg.raw_input = false;
  report["stages"]["intervals"] = run_intervals(vol_cfg);
  report["stages"]["fit"] = run_fit(vol_cfg);
  report["stages"]["hazard"] = run_hazard(vol_cfg);

  RunConfig predict_cfg = cfg;
  predict_cfg.input = (dir / "volatility_raw.csv").string();
  predict_cfg.raw_input = true;
  report["stages"]["predict"] = run_predict(predict_cfg);

  RunConfig rolling_cfg = cfg;
  rolling_cfg.input = (dir / "volatility_raw.csv").string();
  const auto raw_points = riva::read_table(rolling_cfg.input).rows.size();
  if (static_cast<std::int64_t>(raw_points) >= cfg.window_len) {
    report["stages"]["rolling"] = run_rolling(rolling_cfg);
  } else {
    report["stages"]["rolling"] = {{"stage", "rolling"}, {"skipped", "series shorter than one window"}};
  }

  report["provenance"] = {
      {"prediction_mode", cfg.in_sample ? "in_sample" : "out_of_sample"},
      {"pattern_scope", cfg.pattern_scope},
      {"seed", cfg.seed},
  };
  write_json(dir / "report.json", report);

  json j;
  j["stage"] = "report";
  j["output"] = "report.json";
  return j;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, bool needs_input) {
  auto* input = cmd->add_option("--input", cfg.inputs, "input CSV path(s); one pipeline per file");
  if (needs_input) input->required();
  cmd->add_option("--out-dir", cfg.out_dir, "output directory");
  cmd->add_option("--slots-per-day", cfg.slots_per_day, "minute slots per trading day");
  cmd->add_option("--tau", cfg.tau_list, "mean recurrence times tau_Q")->delimiter(',');
  cmd->add_option("--delta-t", cfg.delta_ts, "hazard horizons in slots")->delimiter(',');
  cmd->add_option("--split", cfg.split, "fit fraction for out-of-sample prediction");
  cmd->add_flag("--in-sample", cfg.in_sample, "fit and score on the full series");
  cmd->add_flag("--cross-day", cfg.cross_day, "include overnight returns");
  cmd->add_option("--min-intervals", cfg.min_intervals, "minimum interval count for fitting");
  cmd->add_option("--window-len", cfg.window_len, "rolling window length in slots");
  cmd->add_option("--window-step", cfg.window_step, "rolling window step in slots");
  cmd->add_option("--window-months", cfg.window_months, "rolling window length in months");
  cmd->add_option("--step-months", cfg.step_months, "rolling window step in months");
  cmd->add_option("--days-per-month", cfg.days_per_month, "trading days per month");
  cmd->add_option("--min-months", cfg.min_months, "skip series shorter than this many months");
  cmd->add_flag("--drop-first-month", cfg.drop_first_month, "discard the first month of data");
  cmd->add_option("--pattern-scope", cfg.pattern_scope, "per-window or global deseasonalization")
      ->check(CLI::IsMember({"per-window", "global"}));
  cmd->add_option("--q-p-grid", cfg.qp_grid, "alarm grid: 'auto' or a comma list");
  cmd->add_option("--seed", cfg.seed, "generator seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recurrence-interval analysis of extreme volatility"};
  app.set_version_flag("--version", riva::kVersion);
  app.require_subcommand(1);

  RunConfig cfg;

  auto* preprocess = app.add_subcommand("preprocess", "prices -> normalized volatility");
  add_common_options(preprocess, cfg, true);

  auto* intervals = app.add_subcommand("intervals", "normalized volatility -> interval samples");
  add_common_options(intervals, cfg, true);
  intervals->add_flag("--raw", cfg.raw_input, "input is raw volatility");

  auto* fit = app.add_subcommand("fit", "interval samples -> candidate-family fits");
  add_common_options(fit, cfg, true);
  fit->add_flag("--raw", cfg.raw_input, "input is raw volatility");
  fit->add_flag("--events", cfg.events_input, "input is a 0/1 event series");

  auto* hazard = app.add_subcommand("hazard", "fitted q-exponential -> hazard curves");
  add_common_options(hazard, cfg, true);
  hazard->add_flag("--raw", cfg.raw_input, "input is raw volatility");

  auto* predict = app.add_subcommand("predict", "hazard alarms scored by ROC");
  add_common_options(predict, cfg, true);
  predict->add_flag("--raw", cfg.raw_input, "input is raw volatility");

  auto* rolling = app.add_subcommand("rolling", "moving-window parameter trajectories");
  add_common_options(rolling, cfg, true);

  auto* simulate = app.add_subcommand("simulate", "synthetic series generators");
  add_common_options(simulate, cfg, false);
  simulate->add_option("--kind", cfg.kind, "clustered | qexp | exponential | weibull")
      ->check(CLI::IsMember({"clustered", "qexp", "exponential", "weibull"}));
  simulate->add_option("--n", cfg.n, "series length in slots");
  simulate->add_option("--q", cfg.gen_q, "q-exponential shape");
  simulate->add_option("--lambda", cfg.gen_lambda, "q-exponential rate (raw units)");
  simulate->add_option("--rate", cfg.gen_rate, "exponential rate");
  simulate->add_option("--zeta", cfg.gen_zeta, "weibull shape");
  simulate->add_option("--d", cfg.gen_d, "weibull scale (raw units)");
  simulate->add_option("--level-ratio", cfg.level_ratio, "turbulent/calm level ratio");
  simulate->add_option("--stay-calm", cfg.stay_calm, "calm persistence probability");
  simulate->add_option("--stay-turbulent", cfg.stay_turbulent, "turbulent persistence probability");

  auto* report = app.add_subcommand("report", "full pipeline into one JSON document");
  add_common_options(report, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    validate_common(cfg);

    std::function<json(const RunConfig&)> stage;
    if (preprocess->parsed()) stage = run_preprocess;
    if (intervals->parsed()) stage = run_intervals;
    if (fit->parsed()) stage = run_fit;
    if (hazard->parsed()) stage = run_hazard;
    if (predict->parsed()) stage = run_predict;
    if (rolling->parsed()) stage = run_rolling;
    if (report->parsed()) stage = [](const RunConfig& c) { return run_report(c); };

    if (simulate->parsed()) {
      const json result = run_simulate(cfg);
      std::printf("%s\n", result.dump().c_str());
      return 0;
    }

    // One pipeline per input file; several files run concurrently, each
    // into its own subdirectory.
    std::vector<RunConfig> pipelines;
    for (const auto& input : cfg.inputs) {
      RunConfig per = cfg;
      per.input = input;
      if (cfg.inputs.size() > 1) {
        per.out_dir = (fs::path(cfg.out_dir) / fs::path(input).stem()).string();
      }
      pipelines.push_back(std::move(per));
    }

    json results = json::array();
    if (pipelines.size() == 1) {
      results.push_back(stage(pipelines.front()));
    } else {
      std::vector<std::future<json>> futures;
      futures.reserve(pipelines.size());
      for (const auto& per : pipelines) {
        futures.push_back(std::async(std::launch::async, stage, per));
      }
      for (auto& f : futures) results.push_back(f.get());
    }
    std::printf("%s\n", (results.size() == 1 ? results.front() : results).dump().c_str());
    return 0;
  } catch (const riva::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
}
