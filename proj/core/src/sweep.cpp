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

#include "amlp/sweep.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <chrono>

namespace amlp {

SweepResult run_sweep(const NetworkModel& model,
                      std::span<const LabeledFeatures> testset,
                      const MetricsTable& metrics, const SweepProgress& progress) {
  if (testset.empty()) throw ContractError("run_sweep: empty test set");
  if (metrics.reports.size() != kConfigCount) {
    throw ContractError("run_sweep: metrics table must hold 32 reports");
  }
  model.validate();

  SweepResult result;
  result.rows.reserve(kConfigCount);
  for (MultConfig cfg : all_configs()) {
    const RunResult run = run_dataset(model, testset, cfg);
    const ErrorReport& err = metrics.reports[cfg.mask()];
    if (!(err.config == cfg)) throw ContractError("run_sweep: metrics out of order");
    const CostReport cost = cost_report(cfg);

    SweepRow row;
    row.config = cfg;
    row.accuracy = run.accuracy;
    row.er = err.er;
    row.mred = err.mred;
    row.nmed = err.nmed;
    row.mult_cost = cost.mult_cost;
    row.mac_cost = cost.mac_cost;
    row.network_cost = cost.network_cost_per_image;
    row.network_saving = cost.saving_vs_exact.network;
    row.total_cycles = run.total_cycles;
    if (progress) progress(row);
    result.rows.push_back(row);
  }
  result.summary = summarize_sweep(result.rows, testset.size());
  return result;
}

SweepResult run_sweep(const NetworkModel& model,
                      std::span<const LabeledFeatures> testset) {
  return run_sweep(model, testset, summarize_all());
}

SweepSummary summarize_sweep(const std::vector<SweepRow>& rows, std::size_t images) {
  SweepSummary s;
  s.images = images;
  if (rows.empty()) return s;
  s.accurate_accuracy = rows.front().accuracy;
  s.min_accuracy = rows.front().accuracy;
  s.max_accuracy = rows.front().accuracy;
  double approx_savings = 0.0;
  int approx_count = 0;
  for (const SweepRow& r : rows) {
    s.avg_accuracy += r.accuracy;
    if (r.accuracy < s.min_accuracy) {
      s.min_accuracy = r.accuracy;
      s.min_accuracy_config = r.config.mask();
    }
    if (r.accuracy > s.max_accuracy) s.max_accuracy = r.accuracy;
    if (r.network_saving > s.max_saving) {
      s.max_saving = r.network_saving;
      s.max_saving_config = r.config.mask();
    }
    if (!r.config.is_exact()) {
      approx_savings += r.network_saving;
      ++approx_count;
    }
  }
  s.avg_accuracy /= static_cast<double>(rows.size());
  if (approx_count > 0) s.avg_saving = approx_savings / approx_count;
  return s;
}

std::string mask_bits(MultConfig cfg) {
  std::string bits(5, '0');
  for (int b = 0; b < 5; ++b) {
    if ((cfg.mask() >> b) & 1u) bits[4 - b] = '1';
  }
  return bits;
}

std::string percent4(double fraction) { return fmt::format("{:.4f}", fraction * 100.0); }

namespace {

void write_timestamp(std::ostream& out, const CsvOptions& options) {
  if (!options.timestamp) return;
  const auto now = std::chrono::time_point_cast<std::chrono::seconds>(
      std::chrono::system_clock::now());
  out << fmt::format("# generated {:%Y-%m-%dT%H:%M:%SZ}\n", now);
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     const CsvOptions& options) {
  const SweepSummary& s = result.summary;
  out << "# amlp sweep: " << result.rows.size() << " configurations x " << s.images
      << " images\n";
  write_timestamp(out, options);
  out << "# power columns are a static gate-count proxy in arbitrary units; "
         "operand statistics do not affect them\n";
  out << "# er/mred/nmed/accuracy/network_saving_pct are percentages\n";
  out << "config,mask,accuracy,er_pct,mred_pct,nmed_pct,mult_cost,mac_cost,"
         "network_cost,network_saving_pct\n";
  for (const SweepRow& r : result.rows) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.config.mask(),
                       mask_bits(r.config), percent4(r.accuracy), percent4(r.er),
                       percent4(r.mred), percent4(r.nmed), r.mult_cost, r.mac_cost,
                       r.network_cost, percent4(r.network_saving));
  }
  out << fmt::format("# accuracy: accurate {}%, min {}% (config {}), max {}%, "
                     "average over {} configs {}%\n",
                     percent4(s.accurate_accuracy), percent4(s.min_accuracy),
                     s.min_accuracy_config, percent4(s.max_accuracy),
                     result.rows.size(), percent4(s.avg_accuracy));
  out << fmt::format("# network saving: max {}% (config {}), average over configs "
                     "1-31 {}%\n",
                     percent4(s.max_saving), s.max_saving_config,
                     percent4(s.avg_saving));
}

void write_metrics_csv(std::ostream& out, const MetricsTable& table,
                       const CsvOptions& options) {
  out << "# amlp multiplier error metrics: exhaustive over 128x128 operand pairs\n";
  write_timestamp(out, options);
  out << "# er/mred/nmed are percentages; mean_ed is in product units\n";
  out << "config,er,mred,nmed,max_ed,mean_ed\n";
  for (const ErrorReport& r : table.reports) {
    out << fmt::format("{},{},{},{},{},{:.4f}\n", r.config.mask(), percent4(r.er),
                       percent4(r.mred), percent4(r.nmed), r.max_ed, r.mean_ed);
  }
  const MetricsSummary& s = table.summary;
  out << fmt::format("# summary over configs 1-31 (config 0 excluded, divisor {})\n",
                     s.config_count);
  out << fmt::format("# ER   min {} max {} avg {}\n", percent4(s.er.min),
                     percent4(s.er.max), percent4(s.er.average));
  out << fmt::format("# MRED min {} max {} avg {}\n", percent4(s.mred.min),
                     percent4(s.mred.max), percent4(s.mred.average));
  out << fmt::format("# NMED min {} max {} avg {}\n", percent4(s.nmed.min),
                     percent4(s.nmed.max), percent4(s.nmed.average));
}

}  // namespace amlp
