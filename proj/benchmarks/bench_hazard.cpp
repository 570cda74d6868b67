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

#include "riva/hazard.hpp"

namespace {

void BM_HazardClosedForm(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    if (t > 100.0) t = 0.0;
    benchmark::DoNotOptimize(riva::hazard_qexp(1.3, 0.01, {t, 1.0}));
  }
}
BENCHMARK(BM_HazardClosedForm);

void BM_HazardNumeric(benchmark::State& state) {
  const riva::DistParams params = riva::QExpParams{1.3, 1.0};
  double t = 0.0;
  for (auto _ : state) {
    t += 1.0;
    if (t > 100.0) t = 0.0;
    benchmark::DoNotOptimize(riva::hazard_numeric(params, 1.0, {t, 1.0}));
  }
}
BENCHMARK(BM_HazardNumeric)->Unit(benchmark::kMicrosecond);

}  // namespace
