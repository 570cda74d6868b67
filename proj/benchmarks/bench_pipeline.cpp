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

#include <benchmark/benchmark.h>

#include "riva/predictor.hpp"
#include "riva/recurrence.hpp"
#include "riva/synthetic.hpp"

namespace {

riva::VolatilitySeries clustered(std::int64_t n) {
  riva::GeneratorSpec spec;
  spec.model = riva::ClusteredVolatilitySpec{5.0, 0.99, 0.99};
  spec.n = n;
  spec.seed = 99;
  return riva::clustered_volatility(spec);
}

void BM_ThresholdAndExtract(benchmark::State& state) {
  const auto v = clustered(state.range(0));
  for (auto _ : state) {
    const double q = riva::threshold_for_mean_interval(v, 100.0);
    benchmark::DoNotOptimize(riva::extract_intervals(v, q, 100.0));
  }
}
BENCHMARK(BM_ThresholdAndExtract)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_RocCurveDefaultGrid(benchmark::State& state) {
  const auto v = clustered(state.range(0));
  const double q = riva::threshold_for_mean_interval(v, 100.0);
  const auto events = riva::exceedance_events(v, q);
  const auto hs = riva::hazard_series(events, 1.3, 0.013, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        riva::roc_curve(hs.w, events, riva::default_qp_grid(hs.w), 1));
  }
}
BENCHMARK(BM_RocCurveDefaultGrid)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
