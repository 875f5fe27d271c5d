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

// Offline float training of the 62-30-10 MLP (ReLU hidden layer, softmax
// cross-entropy, mini-batch SGD with momentum) and post-training
// quantization into the sign-magnitude hardware format.

#ifndef AMLP_TRAINER_HPP_
#define AMLP_TRAINER_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "amlp/datapath.hpp"
#include "amlp/dataset.hpp"

namespace amlp {

struct FloatMlp {
  std::vector<double> w1 = std::vector<double>(kHidden * kInputs);  // row-major [30][62]
  std::vector<double> b1 = std::vector<double>(kHidden);
  std::vector<double> w2 = std::vector<double>(kOutputs * kHidden);  // row-major [10][30]
  std::vector<double> b2 = std::vector<double>(kOutputs);

  std::array<std::span<double>, 4> blocks() { return {w1, b1, w2, b2}; }
  std::array<std::span<const double>, 4> blocks() const { return {w1, b1, w2, b2}; }

  // Logits for one input already scaled to [0, 1].
  std::array<double, kOutputs> logits(std::span<const double, kInputs> x) const;
};

struct TrainConfig {
  std::uint64_t seed = 42;
  int epochs = 20;
  int batch_size = 32;
  double learning_rate = 0.05;
  double momentum = 0.9;

  // ContractError on non-positive hyperparameters or momentum >= 1.
  void validate() const;
};

// Feature magnitudes mapped onto [0, 1] (mag / 127).
std::array<double, kInputs> scale_features(const FeatureVector& f) noexcept;

// Mean softmax cross-entropy over the batch.
double mean_loss(const FloatMlp& m, std::span<const LabeledFeatures> batch);

// Mean loss; grad receives d(mean loss)/d(parameters) with the same layout
// as the model.
double loss_and_gradient(const FloatMlp& m, std::span<const LabeledFeatures> batch,
                         FloatMlp& grad);

double float_accuracy(const FloatMlp& m, std::span<const LabeledFeatures> data);

struct TrainResult {
  FloatMlp model;
  double train_accuracy = 0.0;
  double final_loss = 0.0;  // mean loss over the last epoch's batches
};

// Deterministic for a given seed and dataset on one platform. TrainingError
// if the loss stops being finite.
TrainResult train_float(std::span<const LabeledFeatures> trainset,
                        const TrainConfig& tc);

// Float value of one integer unit at each stage of the quantized network.
struct QuantScales {
  double w1 = 0.0;          // hidden weight LSB
  double w2 = 0.0;          // output weight LSB
  double hidden_acc = 0.0;  // hidden accumulator LSB = w1 / 127
  double hidden_act = 0.0;  // hidden activation LSB = hidden_acc * 2^act_shift
  double output_acc = 0.0;  // output accumulator LSB = w2 * hidden_act
};

struct QuantizedMlp {
  NetworkModel model;
  QuantScales scales;
  double clipped_fraction = 0.0;  // calibration activations saturated at 127
};

inline constexpr double kActClipBudget = 0.01;

// Per-layer symmetric weight scale max|w| / 127; a layer-wide bias shift
// minimizing total bias error; hidden act_shift is the smallest shift that
// saturates at most 1% of calibration activations. DegenerateScaleError on
// an all-zero weight layer; ContractError on an empty calibration set.
QuantizedMlp quantize_model(const FloatMlp& m,
                            std::span<const LabeledFeatures> calibration,
                            std::span<const std::uint16_t> feature_indices);

// Inverse mapping through the given scales.
FloatMlp dequantize_model(const NetworkModel& model, const QuantScales& scales);

}  // namespace amlp

#endif  // AMLP_TRAINER_HPP_
