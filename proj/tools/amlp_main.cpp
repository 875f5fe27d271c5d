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

// amlp: train, evaluate and sweep the approximate-MAC MLP accelerator.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 internal
// invariant violation.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "amlp/approx_mult.hpp"
#include "amlp/datapath.hpp"
#include "amlp/error_metrics.hpp"
#include "amlp/model_io.hpp"
#include "amlp/pipeline.hpp"
#include "amlp/power_model.hpp"
#include "amlp/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw amlp::IoError("cannot create " + path);
  return out;
}

void close_output(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw amlp::IoError("write failed: " + path);
}

void print_costs(amlp::MultConfig cfg) {
  const amlp::CostReport c = amlp::cost_report(cfg);
  fmt::print("cost units: multiplier {} | MAC {} | neuron {} | network/image {}\n",
             c.mult_cost, c.mac_cost, c.neuron_cost, c.network_cost_per_image);
  fmt::print("saving vs exact: multiplier {}% | MAC {}% | neuron {}% | network {}%\n",
             amlp::percent4(c.saving_vs_exact.multiplier),
             amlp::percent4(c.saving_vs_exact.mac),
             amlp::percent4(c.saving_vs_exact.neuron),
             amlp::percent4(c.saving_vs_exact.network));
}

struct TrainArgs {
  std::string mnist_dir;
  std::string out;
  amlp::TrainConfig tc;
};

int cmd_train(const TrainArgs& args) {
  fmt::print("loading MNIST from {}\n", args.mnist_dir);
  const amlp::PreparedMnist data = amlp::prepare_mnist(args.mnist_dir);
  fmt::print("{} train / {} test images, 62 features selected\n", data.train.size(),
             data.test.size());
  const amlp::TrainedNetwork net = amlp::train_network(data, args.tc);
  fmt::print("float model: train accuracy {}%, test accuracy {}%, final loss {:.5f}\n",
             amlp::percent4(net.float_result.train_accuracy),
             amlp::percent4(net.float_test_accuracy), net.float_result.final_loss);

  const amlp::NetworkModel& model = net.quantized.model;
  fmt::print("quantized: act_shift {}, hidden bias_shift {}, output bias_shift {}, "
             "{}% calibration activations saturated\n",
             model.hidden_act_shift(), model.hidden_bias_shift(),
             model.output_bias_shift(), amlp::percent4(net.quantized.clipped_fraction));
  const amlp::RunResult run =
      amlp::run_dataset(model, data.test, amlp::MultConfig::exact());
  fmt::print("hardware model, exact mode: test accuracy {}%\n",
             amlp::percent4(run.accuracy));
  amlp::export_model(model, args.out);
  fmt::print("wrote {}\n", args.out);
  return 0;
}

int cmd_eval(const std::string& model_path, const std::string& mnist_dir,
             unsigned config) {
  const amlp::MultConfig cfg(config);
  const amlp::NetworkModel model = amlp::import_model(model_path);
  const auto test = amlp::load_test_features(mnist_dir, model.feature_indices);
  const amlp::RunResult run = amlp::run_dataset(model, test, cfg);
  fmt::print("config {} (mask {}): accuracy {}% ({} / {})\n", cfg.mask(),
             amlp::mask_bits(cfg), amlp::percent4(run.accuracy), run.correct,
             test.size());
  fmt::print("cycles: {} total, {} per image\n", run.total_cycles,
             amlp::kCyclesPerImage);
  print_costs(cfg);
  return 0;
}

int cmd_sweep(const std::string& model_path, const std::string& mnist_dir,
              const std::string& out_path, bool timestamp) {
  const amlp::NetworkModel model = amlp::import_model(model_path);
  const auto test = amlp::load_test_features(mnist_dir, model.feature_indices);
  std::ofstream out = open_output(out_path);
  const amlp::SweepResult result = amlp::run_sweep(
      model, test, amlp::summarize_all(), [](const amlp::SweepRow& row) {
        fmt::print(stderr, "config {:2d}: accuracy {}%, network saving {}%\n",
                   row.config.mask(), amlp::percent4(row.accuracy),
                   amlp::percent4(row.network_saving));
      });
  amlp::write_sweep_csv(out, result, {timestamp});
  close_output(out, out_path);
  const amlp::SweepSummary& s = result.summary;
  fmt::print("accuracy: exact {}%, worst {}% (config {}), average {}%\n",
             amlp::percent4(s.accurate_accuracy), amlp::percent4(s.min_accuracy),
             s.min_accuracy_config, amlp::percent4(s.avg_accuracy));
  fmt::print("network saving: max {}% (config {}), average {}%\n",
             amlp::percent4(s.max_saving), s.max_saving_config,
             amlp::percent4(s.avg_saving));
  fmt::print("wrote {}\n", out_path);
  return 0;
}

int cmd_metrics(const std::string& out_path, bool timestamp) {
  const amlp::MetricsTable table = amlp::summarize_all();
  std::ofstream out = open_output(out_path);
  amlp::write_metrics_csv(out, table, {timestamp});
  close_output(out, out_path);
  const amlp::MetricsSummary& s = table.summary;
  fmt::print("over configs 1-31:      min       max       avg\n");
  fmt::print("  ER   [%] {:>10} {:>9} {:>9}\n", amlp::percent4(s.er.min),
             amlp::percent4(s.er.max), amlp::percent4(s.er.average));
  fmt::print("  MRED [%] {:>10} {:>9} {:>9}\n", amlp::percent4(s.mred.min),
             amlp::percent4(s.mred.max), amlp::percent4(s.mred.average));
  fmt::print("  NMED [%] {:>10} {:>9} {:>9}\n", amlp::percent4(s.nmed.min),
             amlp::percent4(s.nmed.max), amlp::percent4(s.nmed.average));
  fmt::print("wrote {}\n", out_path);
  return 0;
}

int cmd_info(const std::string& model_path) {
  const std::vector<std::uint8_t> bytes = amlp::read_file(model_path);
  const amlp::NetworkModel model = amlp::deserialize_model(bytes);
  const std::uint32_t crc = static_cast<std::uint32_t>(bytes[bytes.size() - 4]) |
                            (static_cast<std::uint32_t>(bytes[bytes.size() - 3]) << 8) |
                            (static_cast<std::uint32_t>(bytes[bytes.size() - 2]) << 16) |
                            (static_cast<std::uint32_t>(bytes[bytes.size() - 1]) << 24);
  fmt::print("file:              {} ({} bytes)\n", model_path, bytes.size());
  fmt::print("format version:    {}\n", amlp::kModelFormatVersion);
  fmt::print("topology:          {}-{}-{}\n", amlp::kInputs, amlp::kHidden, amlp::kOutputs);
  fmt::print("hidden act_shift:  {}\n", model.hidden_act_shift());
  fmt::print("hidden bias_shift: {}\n", model.hidden_bias_shift());
  fmt::print("output bias_shift: {}\n", model.output_bias_shift());
  fmt::print("crc32:             {:08x}\n", crc);
  fmt::print("feature indices:   {}\n", fmt::join(model.feature_indices, " "));
  auto layer_stats = [](const char* name, const std::vector<amlp::NeuronParams>& layer) {
    int max_mag = 0;
    std::size_t zeros = 0;
    std::size_t total = 0;
    for (const amlp::NeuronParams& p : layer) {
      for (amlp::SignMag8 w : p.weights) {
        max_mag = std::max<int>(max_mag, w.magnitude());
        zeros += w.magnitude() == 0;
        ++total;
      }
    }
    fmt::print("{} weights: {} values, max |w| {}, {} zero\n", name, total, max_mag,
               zeros);
  };
  layer_stats("hidden", model.hidden);
  layer_stats("output", model.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate-MAC MLP accelerator simulator"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train, quantize and export a model");
  train_cmd->add_option("--mnist-dir", train.mnist_dir, "MNIST IDX directory")
      ->required();
  train_cmd->add_option("--out", train.out, "Model file to write")->required();
  train_cmd->add_option("--seed", train.tc.seed, "RNG seed")->capture_default_str();
  train_cmd->add_option("--epochs", train.tc.epochs)->capture_default_str();
  train_cmd->add_option("--batch", train.tc.batch_size)->capture_default_str();
  train_cmd->add_option("--lr", train.tc.learning_rate)->capture_default_str();
  train_cmd->add_option("--momentum", train.tc.momentum)->capture_default_str();

  std::string model_path;
  std::string mnist_dir;
  std::string out_path;
  unsigned config = 0;
  bool no_timestamp = false;

  auto* eval_cmd = app.add_subcommand("eval", "Classify the MNIST test set in one configuration");
  eval_cmd->add_option("--model", model_path)->required();
  eval_cmd->add_option("--mnist-dir", mnist_dir)->required();
  eval_cmd->add_option("--config", config, "Error-control mask 0-31")
      ->check(CLI::Range(0u, 31u))
      ->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "Accuracy/error/power over all 32 configurations");
  sweep_cmd->add_option("--model", model_path)->required();
  sweep_cmd->add_option("--mnist-dir", mnist_dir)->required();
  sweep_cmd->add_option("--out", out_path, "CSV to write")->required();
  sweep_cmd->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp comment line");

  auto* metrics_cmd = app.add_subcommand("metrics", "Exhaustive multiplier error table");
  metrics_cmd->add_option("--out", out_path, "CSV to write")->required();
  metrics_cmd->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp comment line");

  auto* info_cmd = app.add_subcommand("info", "Dump a model file header");
  info_cmd->add_option("--model", model_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*train_cmd) return cmd_train(train);
    if (*eval_cmd) return cmd_eval(model_path, mnist_dir, config);
    if (*sweep_cmd) return cmd_sweep(model_path, mnist_dir, out_path, !no_timestamp);
    if (*metrics_cmd) return cmd_metrics(out_path, !no_timestamp);
    if (*info_cmd) return cmd_info(model_path);
  } catch (const amlp::FormatError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitData;
  } catch (const amlp::IoError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    fmt::print(stderr, "internal error: {}\n", e.what());
    return kExitInternal;
  }
  return kExitUsage;
}
