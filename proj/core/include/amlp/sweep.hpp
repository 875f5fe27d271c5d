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

// The 32-configuration accuracy / error / power sweep and its CSV output.

#ifndef AMLP_SWEEP_HPP_
#define AMLP_SWEEP_HPP_

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "amlp/datapath.hpp"
#include "amlp/error_metrics.hpp"
#include "amlp/power_model.hpp"

namespace amlp {

struct SweepRow {
  MultConfig config;
  double accuracy = 0.0;
  double er = 0.0;
  double mred = 0.0;
  double nmed = 0.0;
  std::int64_t mult_cost = 0;
  std::int64_t mac_cost = 0;
  std::int64_t network_cost = 0;
  double network_saving = 0.0;
  std::uint64_t total_cycles = 0;
};

struct SweepSummary {
  std::size_t images = 0;
  double accurate_accuracy = 0.0;  // configuration 0
  double min_accuracy = 0.0;
  unsigned min_accuracy_config = 0;
  double max_accuracy = 0.0;
  double avg_accuracy = 0.0;  // all 32 configurations
  double max_saving = 0.0;
  unsigned max_saving_config = 0;
  double avg_saving = 0.0;  // configurations 1..31
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ascending config
  SweepSummary summary;
};

using SweepProgress = std::function<void(const SweepRow&)>;

// ContractError on an empty test set.
SweepResult run_sweep(const NetworkModel& model,
                      std::span<const LabeledFeatures> testset,
                      const MetricsTable& metrics,
                      const SweepProgress& progress = {});
SweepResult run_sweep(const NetworkModel& model,
                      std::span<const LabeledFeatures> testset);

SweepSummary summarize_sweep(const std::vector<SweepRow>& rows, std::size_t images);

struct CsvOptions {
  bool timestamp = true;  // the only non-deterministic line
};

// Binary rendering of the 5-bit mask, bit 4 first.
std::string mask_bits(MultConfig cfg);

// "12.3456": fraction printed as a percentage with 4 decimals.
std::string percent4(double fraction);

void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     const CsvOptions& options = {});
void write_metrics_csv(std::ostream& out, const MetricsTable& table,
                       const CsvOptions& options = {});

}  // namespace amlp

#endif  // AMLP_SWEEP_HPP_
