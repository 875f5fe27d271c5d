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

// Multicycle datapath: ten physical neurons time-shared over four passes per
// image under a five-state controller.
//
//   S0, S1, S2  hidden neurons 0-9, 10-19, 20-29 -> register bank 0, 1, 2
//   S3          output neurons over the 30 banked activations, argmax,
//               image counter; loop to S0 while images remain
//   S4          done
//
// Cycle model: one input per cycle plus one writeback cycle per pass,
// 63 * 3 + 31 = 220 cycles per image.

#ifndef AMLP_DATAPATH_HPP_
#define AMLP_DATAPATH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "amlp/dataset.hpp"
#include "amlp/mac_neuron.hpp"
#include "amlp/topology.hpp"

namespace amlp {

struct NetworkModel {
  std::vector<std::uint16_t> feature_indices;  // 62 positions on the 14x14 grid
  std::vector<NeuronParams> hidden;            // 30 x fan-in 62
  std::vector<NeuronParams> output;            // 10 x fan-in 30

  // Shifts are stored per layer; every neuron of a layer must agree.
  int hidden_act_shift() const { return hidden.at(0).act_shift; }
  int hidden_bias_shift() const { return hidden.at(0).bias_shift; }
  int output_bias_shift() const { return output.at(0).bias_shift; }

  // ContractError describing the first violated structural invariant.
  void validate() const;

  friend bool operator==(const NetworkModel&, const NetworkModel&) = default;
};

enum class FsmState : std::uint8_t { kS0, kS1, kS2, kS3, kS4 };

const char* to_string(FsmState s) noexcept;

// ContractError when stepping from S4.
FsmState fsm_next(FsmState state, bool images_remaining);

std::uint32_t cycles_in_state(FsmState state) noexcept;
inline constexpr std::uint32_t kCyclesPerImage = 220;

// Highest signed value, lowest index on ties.
int argmax(std::span<const SignedAcc, kOutputs> outputs) noexcept;

struct Prediction {
  int label = 0;
  std::uint32_t cycles = 0;
};

struct DatapathState {
  FsmState state = FsmState::kS0;
  std::array<std::array<SignMag8, kPhysicalNeurons>, kHiddenPasses> hidden_regs{};
  std::array<SignedAcc, kOutputs> output_raw{};
  std::size_t image_counter = 0;
  std::uint64_t cycle_counter = 0;
};

// Steps the controller over a batch of feature vectors. Non-owning: the model
// and images must outlive the accelerator.
class Accelerator {
 public:
  Accelerator(const NetworkModel& model, MultConfig cfg);

  // Resets to S0 with the image counter at zero. An empty batch is a
  // ContractError.
  void load(std::span<const FeatureVector> images);

  // Executes the current state's work and transitions. Returns the
  // prediction completed in S3, if any.
  std::optional<Prediction> step();

  bool done() const noexcept { return regs_.state == FsmState::kS4; }
  const DatapathState& state() const noexcept { return regs_; }

 private:
  void hidden_pass(std::size_t bank);
  Prediction output_pass();

  const NetworkModel& model_;
  MultConfig cfg_;
  std::span<const FeatureVector> images_;
  DatapathState regs_;
  std::uint32_t image_cycles_ = 0;
};

Prediction classify_image(const NetworkModel& model, const FeatureVector& features,
                          MultConfig cfg);

struct RunResult {
  double accuracy = 0.0;
  std::size_t correct = 0;
  std::uint64_t total_cycles = 0;
  std::vector<Prediction> predictions;
  std::vector<FsmState> trace;  // only filled when requested
};

RunResult run_dataset(const NetworkModel& model,
                      std::span<const LabeledFeatures> examples, MultConfig cfg,
                      bool record_trace = false);

}  // namespace amlp

#endif  // AMLP_DATAPATH_HPP_
