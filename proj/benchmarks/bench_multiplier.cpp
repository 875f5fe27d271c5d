// Copyright 2026 The amlp Authors
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

#include "amlp/approx_mult.hpp"
#include "amlp/error_metrics.hpp"

namespace {

void BM_MultiplyMag(benchmark::State& state) {
  const amlp::MultConfig cfg(static_cast<unsigned>(state.range(0)));
  std::uint32_t a = 1;
  std::uint32_t b = 77;
  for (auto _ : state) {
    benchmark::DoNotOptimize(amlp::multiply_mag(a, b, cfg));
    a = (a + 1) & 127;
    b = (b + 3) & 127;
  }
}
BENCHMARK(BM_MultiplyMag)->Arg(0)->Arg(31);

void BM_ProductTableLookup(benchmark::State& state) {
  const amlp::ProductTable& table = amlp::ProductTable::instance();
  const amlp::MultConfig cfg(31);
  std::uint32_t a = 1;
  std::uint32_t b = 77;
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.magnitude(cfg, a, b));
    a = (a + 1) & 127;
    b = (b + 3) & 127;
  }
}
BENCHMARK(BM_ProductTableLookup);

void BM_EvaluateConfig(benchmark::State& state) {
  const amlp::MultConfig cfg(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(amlp::evaluate_config(cfg));
  state.SetItemsProcessed(state.iterations() * amlp::kOperandPairs);
}
BENCHMARK(BM_EvaluateConfig)->Arg(1)->Arg(31)->Unit(benchmark::kMicrosecond);

void BM_SummarizeAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(amlp::summarize_all());
}
BENCHMARK(BM_SummarizeAll)->Unit(benchmark::kMillisecond);

}  // namespace
