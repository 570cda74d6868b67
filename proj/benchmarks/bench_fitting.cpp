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

#include <vector>

#include "riva/fitting.hpp"
#include "riva/synthetic.hpp"

namespace {

riva::ScaledSample qexp_sample(std::size_t n) {
  riva::SplitMix64 rng(99);
  std::vector<double> values(n);
  for (auto& v : values) v = riva::sample_qexp_interval(1.3, 2.5, rng.next_double());
  return riva::make_scaled_sample(values);
}

void BM_FitStretchedExp(benchmark::State& state) {
  const auto sample = qexp_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riva::fit_stretched_exp(sample));
  }
}
BENCHMARK(BM_FitStretchedExp)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FitPowerLawCutoff(benchmark::State& state) {
  const auto sample = qexp_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riva::fit_powerlaw_cutoff(sample));
  }
}
BENCHMARK(BM_FitPowerLawCutoff)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FitQExp(benchmark::State& state) {
  const auto sample = qexp_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riva::fit_qexp(sample));
  }
}
BENCHMARK(BM_FitQExp)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FitWeibull3(benchmark::State& state) {
  const auto sample = qexp_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riva::fit_weibull3(sample));
  }
}
BENCHMARK(BM_FitWeibull3)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_KsStatistic(benchmark::State& state) {
  const auto sample = qexp_sample(static_cast<std::size_t>(state.range(0)));
  const riva::DistParams params = riva::QExpParams{1.3, 2.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(riva::ks_statistic(sample, params, 100.0));
  }
}
BENCHMARK(BM_KsStatistic)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace
