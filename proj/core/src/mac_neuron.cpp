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

#include "amlp/mac_neuron.hpp"

#include <string>

namespace amlp {

SignedAcc mac_reduce(std::span<const SignMag8> inputs,
                     std::span<const SignMag8> weights, MultConfig cfg) {
  if (inputs.size() != weights.size() || inputs.empty()) {
    throw ContractError("mac_reduce: " + std::to_string(inputs.size()) +
                        " inputs vs " + std::to_string(weights.size()) +
                        " weights");
  }
  const ProductTable& table = ProductTable::instance();
  SignedAcc acc;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    acc = acc_add(acc, table.multiply(inputs[k], weights[k], cfg));
  }
  return acc;
}

SignedAcc apply_bias(SignedAcc acc, SignMag8 bias, int bias_shift) {
  if (bias_shift < 0 || bias_shift > kMaxBiasShift) {
    throw RangeError("apply_bias: shift " + std::to_string(bias_shift) +
                     " outside [0, 13]");
  }
  // 127 << 13 still fits the 20-bit magnitude.
  return acc_add(acc, static_cast<std::int64_t>(decode(bias)) << bias_shift);
}

SignMag8 activate(SignedAcc acc, int act_shift) {
  if (act_shift < 0 || act_shift > kMaxActShift) {
    throw RangeError("activate: shift " + std::to_string(act_shift) +
                     " outside [0, 20]");
  }
  if (acc.negative()) return SignMag8{};
  return SignMag8::unchecked(false, rescale_clamp(acc.magnitude(), act_shift));
}

SignedAcc neuron_forward_raw(std::span<const SignMag8> inputs,
                             const NeuronParams& params, MultConfig cfg) {
  return apply_bias(mac_reduce(inputs, params.weights, cfg), params.bias,
                    params.bias_shift);
}

SignMag8 neuron_forward(std::span<const SignMag8> inputs,
                        const NeuronParams& params, MultConfig cfg) {
  return activate(neuron_forward_raw(inputs, params, cfg), params.act_shift);
}

}  // namespace amlp
