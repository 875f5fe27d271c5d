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

// End-to-end glue: MNIST directory -> features -> float MLP -> hardware model.

#ifndef AMLP_PIPELINE_HPP_
#define AMLP_PIPELINE_HPP_

#include <filesystem>
#include <vector>

#include "amlp/dataset.hpp"
#include "amlp/trainer.hpp"

namespace amlp {

// Leading training examples used to calibrate the activation shift.
inline constexpr std::size_t kCalibrationSamples = 5000;

struct PreparedMnist {
  std::vector<std::uint16_t> feature_indices;  // selected on the training split
  std::vector<LabeledFeatures> train;
  std::vector<LabeledFeatures> test;
};

PreparedMnist prepare_mnist(const std::filesystem::path& dir);

// Test split only, reduced with an existing model's feature indices.
std::vector<LabeledFeatures> load_test_features(
    const std::filesystem::path& dir, std::span<const std::uint16_t> indices);

struct TrainedNetwork {
  TrainResult float_result;
  double float_test_accuracy = 0.0;
  QuantizedMlp quantized;
};

TrainedNetwork train_network(const PreparedMnist& data, const TrainConfig& tc);

}  // namespace amlp

#endif  // AMLP_PIPELINE_HPP_
