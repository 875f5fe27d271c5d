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

#include "amlp/pipeline.hpp"

#include <algorithm>

namespace amlp {

PreparedMnist prepare_mnist(const std::filesystem::path& dir) {
  const MnistData train = load_mnist(dir, MnistSplit::kTrain);
  const MnistData test = load_mnist(dir, MnistSplit::kTest);
  PreparedMnist out;
  out.feature_indices = select_features(train.pooled);
  out.train = make_features(train, out.feature_indices);
  out.test = make_features(test, out.feature_indices);
  return out;
}

std::vector<LabeledFeatures> load_test_features(
    const std::filesystem::path& dir, std::span<const std::uint16_t> indices) {
  return make_features(load_mnist(dir, MnistSplit::kTest), indices);
}

TrainedNetwork train_network(const PreparedMnist& data, const TrainConfig& tc) {
  TrainedNetwork out;
  out.float_result = train_float(data.train, tc);
  out.float_test_accuracy = float_accuracy(out.float_result.model, data.test);
  const std::size_t n = std::min(kCalibrationSamples, data.train.size());
  out.quantized = quantize_model(out.float_result.model,
                                 std::span(data.train).first(n), data.feature_indices);
  return out;
}

}  // namespace amlp
