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

#include "amlp/power_model.hpp"

#include <cmath>

namespace amlp {

std::int64_t multiplier_cost(MultConfig cfg) noexcept {
  const ColumnPlan plan = approx_columns(cfg);
  std::int64_t cost = 0;
  for (int c = 0; c < kProductColumns; ++c) {
    const std::int64_t n = kColumnPopulation[c];
    if (n == 0) continue;
    cost += kAndGateCost * n;
    cost += plan.test(c) ? kOrGateCost * (n - 1)
                         : kFullAdderCost * (n - 1) + kCarryChainCost;
  }
  return cost;
}

std::int64_t mac_cost(MultConfig cfg) noexcept {
  return multiplier_cost(cfg) + kAccumulatorOverhead;
}

std::int64_t neuron_overhead() noexcept {
  // Choose N so that saving(neuron) / saving(MAC) = mac(0) / (mac(0) + N)
  // matches the anchor ratio at full approximation.
  const double mac0 = static_cast<double>(mac_cost(MultConfig::exact()));
  return std::llround(mac0 * kMacSavingAnchor / kNeuronSavingAnchor - mac0);
}

std::int64_t neuron_cost(MultConfig cfg) noexcept {
  return mac_cost(cfg) + neuron_overhead();
}

std::int64_t network_overhead() noexcept {
  const double neurons0 = static_cast<double>(kMultipliesPerImage) *
                          static_cast<double>(neuron_cost(MultConfig::exact()));
  return std::llround(neurons0 * (kNeuronSavingAnchor / kNetworkSavingAnchor - 1.0));
}

std::int64_t network_cost_per_image(MultConfig cfg) noexcept {
  return static_cast<std::int64_t>(kMultipliesPerImage) * neuron_cost(cfg) +
         network_overhead();
}

Savings savings_pct(MultConfig cfg) noexcept {
  const MultConfig exact = MultConfig::exact();
  auto rel = [](std::int64_t base, std::int64_t v) {
    return static_cast<double>(base - v) / static_cast<double>(base);
  };
  return Savings{
      rel(multiplier_cost(exact), multiplier_cost(cfg)),
      rel(mac_cost(exact), mac_cost(cfg)),
      rel(neuron_cost(exact), neuron_cost(cfg)),
      rel(network_cost_per_image(exact), network_cost_per_image(cfg)),
  };
}

CostReport cost_report(MultConfig cfg) noexcept {
  return CostReport{cfg,
                    multiplier_cost(cfg),
                    mac_cost(cfg),
                    neuron_cost(cfg),
                    network_cost_per_image(cfg),
                    savings_pct(cfg)};
}

}  // namespace amlp
