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

// Exhaustive accuracy characterization of the approximate multiplier over
// all 128 x 128 operand pairs.

#ifndef AMLP_ERROR_METRICS_HPP_
#define AMLP_ERROR_METRICS_HPP_

#include <cstdint>
#include <vector>

#include "amlp/approx_mult.hpp"

namespace amlp {

inline constexpr std::uint32_t kOperandPairs = 128 * 128;

struct ErrorReport {
  MultConfig config;
  double er = 0.0;    // fraction of pairs with a non-zero error distance
  double mred = 0.0;  // mean ED / exact over pairs whose exact product != 0
  double nmed = 0.0;  // mean ED / 16129
  std::uint32_t max_ed = 0;
  double mean_ed = 0.0;
  // Integer tallies behind the fractions.
  std::uint32_t error_pairs = 0;
  std::uint64_t total_ed = 0;
};

struct MetricStats {
  double min = 0.0;
  double max = 0.0;
  double average = 0.0;
};

// Statistics over the approximate configurations only (masks 1..31); the
// exact configuration is excluded, so the average divides by 31.
struct MetricsSummary {
  MetricStats er;
  MetricStats mred;
  MetricStats nmed;
  int config_count = 0;
};

struct MetricsTable {
  std::vector<ErrorReport> reports;  // ascending mask, 32 entries
  MetricsSummary summary;
};

ErrorReport evaluate_config(MultConfig cfg);

MetricsSummary summarize(const std::vector<ErrorReport>& reports);

MetricsTable summarize_all();

}  // namespace amlp

#endif  // AMLP_ERROR_METRICS_HPP_
