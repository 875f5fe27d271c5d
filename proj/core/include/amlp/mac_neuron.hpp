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

// MAC unit and neuron: approximate multiply, sign-magnitude accumulate,
// shifted bias, ReLU and saturation to 8 bits.

#ifndef AMLP_MAC_NEURON_HPP_
#define AMLP_MAC_NEURON_HPP_

#include <span>
#include <vector>

#include "amlp/approx_mult.hpp"
#include "amlp/fixedpoint.hpp"

namespace amlp {

inline constexpr int kMaxBiasShift = 13;
inline constexpr int kMaxActShift = 20;

struct NeuronParams {
  std::vector<SignMag8> weights;
  SignMag8 bias;
  int bias_shift = 0;  // bias is added as bias * 2^bias_shift
  int act_shift = 0;   // accumulator >> act_shift before clamping to 127

  friend bool operator==(const NeuronParams&, const NeuronParams&) = default;
};

// Folds acc_add over the signed products in index order. ContractError on
// length mismatch or empty input.
SignedAcc mac_reduce(std::span<const SignMag8> inputs,
                     std::span<const SignMag8> weights, MultConfig cfg);

SignedAcc apply_bias(SignedAcc acc, SignMag8 bias, int bias_shift);

// ReLU then rescale_clamp; the result is never negative.
SignMag8 activate(SignedAcc acc, int act_shift);

SignMag8 neuron_forward(std::span<const SignMag8> inputs,
                        const NeuronParams& params, MultConfig cfg);

// Pre-activation value fed to the output comparator.
SignedAcc neuron_forward_raw(std::span<const SignMag8> inputs,
                             const NeuronParams& params, MultConfig cfg);

}  // namespace amlp

#endif  // AMLP_MAC_NEURON_HPP_
