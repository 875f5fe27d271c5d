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

#include <random>

#include "amlp/datapath.hpp"
#include "amlp/mac_neuron.hpp"

namespace {

amlp::SignMag8 random_sm8(std::mt19937& rng) {
  return amlp::encode(std::uniform_int_distribution<int>(-127, 127)(rng));
}

amlp::NetworkModel make_model() {
  std::mt19937 rng(1);
  amlp::NetworkModel m;
  for (std::uint16_t i = 0; i < amlp::kInputs; ++i) m.feature_indices.push_back(i);
  m.hidden.resize(amlp::kHidden);
  for (amlp::NeuronParams& p : m.hidden) {
    for (std::size_t i = 0; i < amlp::kInputs; ++i) p.weights.push_back(random_sm8(rng));
    p.bias = random_sm8(rng);
    p.bias_shift = 6;
    p.act_shift = 8;
  }
  m.output.resize(amlp::kOutputs);
  for (amlp::NeuronParams& p : m.output) {
    for (std::size_t i = 0; i < amlp::kHidden; ++i) p.weights.push_back(random_sm8(rng));
    p.bias = random_sm8(rng);
    p.bias_shift = 6;
  }
  return m;
}

std::vector<amlp::LabeledFeatures> make_images(std::size_t n) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> pix(0, 127);
  std::vector<amlp::LabeledFeatures> out(n);
  for (amlp::LabeledFeatures& ex : out) {
    for (amlp::SignMag8& v : ex.features) v = amlp::encode(pix(rng));
    ex.label = static_cast<std::uint8_t>(rng() % 10);
  }
  return out;
}

void BM_MacReduce62(benchmark::State& state) {
  const amlp::NetworkModel m = make_model();
  const auto images = make_images(1);
  const amlp::MultConfig cfg(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(amlp::mac_reduce(images[0].features, m.hidden[0].weights, cfg));
  }
}
BENCHMARK(BM_MacReduce62)->Arg(0)->Arg(31);

void BM_ClassifyImage(benchmark::State& state) {
  const amlp::NetworkModel m = make_model();
  const auto images = make_images(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(amlp::classify_image(m, images[0].features, amlp::MultConfig(31)));
  }
}
BENCHMARK(BM_ClassifyImage);

void BM_RunDataset(benchmark::State& state) {
  const amlp::NetworkModel m = make_model();
  const auto images = make_images(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(amlp::run_dataset(m, images, amlp::MultConfig(31)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunDataset)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
