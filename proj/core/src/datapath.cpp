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

#include "amlp/datapath.hpp"

#include <algorithm>
#include <string>

namespace amlp {
namespace {

void check_layer(const std::vector<NeuronParams>& layer, std::size_t count,
                 std::size_t fan_in, const char* name) {
  if (layer.size() != count) {
    throw ContractError(std::string(name) + " layer has " +
                        std::to_string(layer.size()) + " neurons, expected " +
                        std::to_string(count));
  }
  for (std::size_t n = 0; n < layer.size(); ++n) {
    const NeuronParams& p = layer[n];
    const std::string where = std::string(name) + " neuron " + std::to_string(n);
    if (p.weights.size() != fan_in) {
      throw ContractError(where + ": fan-in " + std::to_string(p.weights.size()) +
                          ", expected " + std::to_string(fan_in));
    }
    if (p.bias_shift < 0 || p.bias_shift > kMaxBiasShift ||
        p.act_shift < 0 || p.act_shift > kMaxActShift) {
      throw ContractError(where + ": shift out of range");
    }
    if (p.bias_shift != layer[0].bias_shift || p.act_shift != layer[0].act_shift) {
      throw ContractError(where + ": shifts differ from the rest of the layer");
    }
  }
}

}  // namespace

void NetworkModel::validate() const {
  if (feature_indices.size() != kInputs) {
    throw ContractError("model: " + std::to_string(feature_indices.size()) +
                        " feature indices, expected 62");
  }
  std::vector<std::uint16_t> sorted = feature_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractError("model: duplicate feature index");
  }
  if (sorted.back() >= kPooledPixels) {
    throw ContractError("model: feature index " + std::to_string(sorted.back()) +
                        " outside the 196-position grid");
  }
  check_layer(hidden, kHidden, kInputs, "hidden");
  check_layer(output, kOutputs, kHidden, "output");
}

const char* to_string(FsmState s) noexcept {
  switch (s) {
    case FsmState::kS0: return "S0";
    case FsmState::kS1: return "S1";
    case FsmState::kS2: return "S2";
    case FsmState::kS3: return "S3";
    case FsmState::kS4: return "S4";
  }
  return "?";
}

FsmState fsm_next(FsmState state, bool images_remaining) {
  switch (state) {
    case FsmState::kS0: return FsmState::kS1;
    case FsmState::kS1: return FsmState::kS2;
    case FsmState::kS2: return FsmState::kS3;
    case FsmState::kS3: return images_remaining ? FsmState::kS0 : FsmState::kS4;
    case FsmState::kS4: break;
  }
  throw ContractError("fsm_next: controller already halted in S4");
}

std::uint32_t cycles_in_state(FsmState state) noexcept {
  switch (state) {
    case FsmState::kS0:
    case FsmState::kS1:
    case FsmState::kS2:
      return kInputs + 1;
    case FsmState::kS3:
      return kHidden + 1;
    case FsmState::kS4:
      return 0;
  }
  return 0;
}

static_assert(3 * (kInputs + 1) + (kHidden + 1) == kCyclesPerImage);

int argmax(std::span<const SignedAcc, kOutputs> outputs) noexcept {
  int best = 0;
  for (std::size_t i = 1; i < outputs.size(); ++i) {
    if (outputs[i].value() > outputs[best].value()) best = static_cast<int>(i);
  }
  return best;
}

Accelerator::Accelerator(const NetworkModel& model, MultConfig cfg)
    : model_(model), cfg_(cfg) {
  model_.validate();
  regs_.state = FsmState::kS4;
}

void Accelerator::load(std::span<const FeatureVector> images) {
  if (images.empty()) throw ContractError("accelerator: empty image batch");
  images_ = images;
  regs_ = DatapathState{};
  image_cycles_ = 0;
}

void Accelerator::hidden_pass(std::size_t bank) {
  const FeatureVector& x = images_[regs_.image_counter];
  for (std::size_t p = 0; p < kPhysicalNeurons; ++p) {
    const NeuronParams& params = model_.hidden[bank * kPhysicalNeurons + p];
    regs_.hidden_regs[bank][p] = neuron_forward(x, params, cfg_);
  }
}

Prediction Accelerator::output_pass() {
  std::array<SignMag8, kHidden> activations;
  for (std::size_t bank = 0; bank < kHiddenPasses; ++bank) {
    std::copy(regs_.hidden_regs[bank].begin(), regs_.hidden_regs[bank].end(),
              activations.begin() + bank * kPhysicalNeurons);
  }
  for (std::size_t p = 0; p < kOutputs; ++p) {
    regs_.output_raw[p] = neuron_forward_raw(activations, model_.output[p], cfg_);
  }
  return Prediction{argmax(regs_.output_raw), image_cycles_};
}

std::optional<Prediction> Accelerator::step() {
  const FsmState current = regs_.state;
  if (current == FsmState::kS4) {
    fsm_next(current, false);  // throws
  }
  const std::uint32_t cycles = cycles_in_state(current);
  regs_.cycle_counter += cycles;
  image_cycles_ += cycles;

  std::optional<Prediction> done;
  switch (current) {
    case FsmState::kS0:
    case FsmState::kS1:
    case FsmState::kS2:
      hidden_pass(static_cast<std::size_t>(current));
      break;
    case FsmState::kS3:
      done = output_pass();
      ++regs_.image_counter;
      image_cycles_ = 0;
      break;
    case FsmState::kS4:
      break;
  }
  regs_.state = fsm_next(current, regs_.image_counter < images_.size());
  return done;
}

Prediction classify_image(const NetworkModel& model, const FeatureVector& features,
                          MultConfig cfg) {
  Accelerator acc(model, cfg);
  acc.load(std::span<const FeatureVector>(&features, 1));
  std::optional<Prediction> result;
  while (!acc.done()) {
    if (auto p = acc.step()) result = p;
  }
  return *result;
}

RunResult run_dataset(const NetworkModel& model,
                      std::span<const LabeledFeatures> examples, MultConfig cfg,
                      bool record_trace) {
  if (examples.empty()) throw ContractError("run_dataset: empty dataset");
  std::vector<FeatureVector> images;
  images.reserve(examples.size());
  for (const LabeledFeatures& ex : examples) images.push_back(ex.features);

  Accelerator acc(model, cfg);
  acc.load(images);
  RunResult out;
  out.predictions.reserve(examples.size());
  if (record_trace) out.trace.push_back(acc.state().state);
  while (!acc.done()) {
    if (auto p = acc.step()) {
      if (p->label == examples[out.predictions.size()].label) ++out.correct;
      out.predictions.push_back(*p);
    }
    if (record_trace) out.trace.push_back(acc.state().state);
  }
  out.total_cycles = acc.state().cycle_counter;
  out.accuracy = static_cast<double>(out.correct) / examples.size();
  return out;
}

}  // namespace amlp
