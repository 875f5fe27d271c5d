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

// Static gate-count power proxy in integer units. Costs are operand
// independent; only ratios between configurations are meaningful.
//
// Multiplier: one unit per partial-product AND gate, then per column
//   exact         5 * (n - 1) + 2   (full-adder equivalents plus carry chain)
//   approximated  1 * (n - 1)       (OR tree)
//
// MAC, neuron and network levels add fixed overheads. The neuron and network
// overheads are calibrated so that, at full approximation, the ratios
// neuron:MAC and network:neuron savings equal 24.78:44.36 and 13.33:24.78.

#ifndef AMLP_POWER_MODEL_HPP_
#define AMLP_POWER_MODEL_HPP_

#include <cstdint>

#include "amlp/approx_mult.hpp"
#include "amlp/topology.hpp"

namespace amlp {

inline constexpr std::int64_t kAndGateCost = 1;
inline constexpr std::int64_t kFullAdderCost = 5;
inline constexpr std::int64_t kCarryChainCost = 2;
inline constexpr std::int64_t kOrGateCost = 1;

// 21-bit accumulator adder (105) plus sign/compare logic (50).
inline constexpr std::int64_t kAccumulatorOverhead = 105 + 50;

inline constexpr double kMacSavingAnchor = 0.4436;
inline constexpr double kNeuronSavingAnchor = 0.2478;
inline constexpr double kNetworkSavingAnchor = 0.1333;

std::int64_t multiplier_cost(MultConfig cfg) noexcept;
std::int64_t mac_cost(MultConfig cfg) noexcept;
std::int64_t neuron_cost(MultConfig cfg) noexcept;
std::int64_t network_cost_per_image(MultConfig cfg) noexcept;

// Calibrated constants (see header comment).
std::int64_t neuron_overhead() noexcept;   // 324
std::int64_t network_overhead() noexcept;  // 1361837

struct Savings {
  double multiplier = 0.0;
  double mac = 0.0;
  double neuron = 0.0;
  double network = 0.0;
};

// (cost(0) - cost(cfg)) / cost(0) at each level.
Savings savings_pct(MultConfig cfg) noexcept;

struct CostReport {
  MultConfig config;
  std::int64_t mult_cost = 0;
  std::int64_t mac_cost = 0;
  std::int64_t neuron_cost = 0;
  std::int64_t network_cost_per_image = 0;
  Savings saving_vs_exact;
};

CostReport cost_report(MultConfig cfg) noexcept;

}  // namespace amlp

#endif  // AMLP_POWER_MODEL_HPP_
