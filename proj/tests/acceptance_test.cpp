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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails.
//
//   acceptance_test [--criterion N] [--mnist-dir DIR]
//
// The MNIST directory defaults to $AMLP_MNIST_DIR.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "amlp/approx_mult.hpp"
#include "amlp/datapath.hpp"
#include "amlp/error_metrics.hpp"
#include "amlp/mac_neuron.hpp"
#include "amlp/model_io.hpp"
#include "amlp/pipeline.hpp"
#include "amlp/power_model.hpp"
#include "amlp/sweep.hpp"
#include "support/oracles.hpp"

namespace {

using amlp::MultConfig;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Trained once per process and shared by the criteria that need real data.
class Context {
 public:
  explicit Context(std::filesystem::path mnist_dir) : mnist_dir_(std::move(mnist_dir)) {}

  bool has_mnist() const {
    return !mnist_dir_.empty() &&
           std::filesystem::exists(mnist_dir_ / "train-images-idx3-ubyte") &&
           std::filesystem::exists(mnist_dir_ / "t10k-images-idx3-ubyte");
  }

  std::string missing_mnist() const {
    return fmt::format("MNIST not found in '{}' (set AMLP_MNIST_DIR)", mnist_dir_.string());
  }

  const amlp::PreparedMnist& data() {
    if (!data_) data_ = amlp::prepare_mnist(mnist_dir_);
    return *data_;
  }

  const amlp::TrainedNetwork& network() {
    if (!network_) network_ = amlp::train_network(data(), amlp::TrainConfig{});
    return *network_;
  }

 private:
  std::filesystem::path mnist_dir_;
  std::optional<amlp::PreparedMnist> data_;
  std::optional<amlp::TrainedNetwork> network_;
};

Verdict multiplier_exactness(Context&) {
  const auto start = Clock::now();
  int failures = 0;
  for (std::uint32_t a = 0; a < 128; ++a)
    for (std::uint32_t b = 0; b < 128; ++b)
      failures += amlp::multiply_mag(a, b, MultConfig::exact()) != a * b;
  const double t = seconds_since(start);
  return {failures == 0 && t < 1.0,
          fmt::format("{} failures over 16384 pairs in {:.3f} s (limit 1 s)", failures, t)};
}

Verdict under_approximation_and_monotonicity(Context&) {
  const auto start = Clock::now();
  std::uint64_t over = 0;
  std::uint64_t non_monotone = 0;
  std::optional<std::string> witness;
  for (unsigned m1 = 0; m1 < 32; ++m1) {
    for (std::uint32_t a = 0; a < 128; ++a)
      for (std::uint32_t b = 0; b < 128; ++b)
        over += amlp::multiply_mag(a, b, MultConfig(m1)) > a * b;
    for (unsigned m2 = 0; m2 < 32; ++m2) {
      if (m1 == m2 || (m1 & m2) != m1) continue;
      for (std::uint32_t a = 0; a < 128; ++a) {
        for (std::uint32_t b = 0; b < 128; ++b) {
          const auto r1 = amlp::multiply_mag(a, b, MultConfig(m1));
          const auto r2 = amlp::multiply_mag(a, b, MultConfig(m2));
          if (r2 > r1) {
            ++non_monotone;
            if (!witness) {
              witness = fmt::format("{}x{}: mask {} -> {}, mask {} -> {}", a, b, m1, r1,
                                    m2, r2);
            }
          }
        }
      }
    }
  }
  const double t = seconds_since(start);
  return {over == 0 && non_monotone == 0 && t < 30.0,
          fmt::format("{} over-estimates, {} inclusion violations{} in {:.1f} s", over,
                      non_monotone, witness ? " (first " + *witness + ")" : "", t)};
}

Verdict error_metric_oracle(Context&) {
  const amlp::MetricsTable table = amlp::summarize_all();
  const amlp::ErrorReport& zero = table.reports[0];
  const bool zero_ok = zero.er == 0.0 && zero.mred == 0.0 && zero.nmed == 0.0;
  int non_positive = 0;
  int er_bad = 0, mred_bad = 0, nmed_bad = 0;
  for (unsigned m1 = 1; m1 < 32; ++m1) {
    const amlp::ErrorReport& r1 = table.reports[m1];
    non_positive += !(r1.er > 0.0 && r1.mred > 0.0 && r1.nmed > 0.0);
    for (unsigned m2 = 1; m2 < 32; ++m2) {
      if (m1 == m2 || (m1 & m2) != m1) continue;
      const amlp::ErrorReport& r2 = table.reports[m2];
      er_bad += r2.er < r1.er;
      mred_bad += r2.mred < r1.mred;
      nmed_bad += r2.nmed < r1.nmed;
    }
  }
  const std::uint32_t max_ed31 = table.reports[31].max_ed;
  const amlp::MetricsSummary& s = table.summary;
  return {zero_ok && non_positive == 0 && er_bad == 0 && mred_bad == 0 && nmed_bad == 0 &&
              max_ed31 == 3842,
          fmt::format("cfg0 zero {}; {} non-positive; inclusion violations ER {} MRED {} "
                      "NMED {}; max_ed(31) = {} (want 3842); ranges over 1-31: ER "
                      "{}-{}% MRED {}-{}% NMED {}-{}% (published: ER <= 61.83%, MRED <= "
                      "3.68%, NMED <= 0.364%)",
                      zero_ok ? "yes" : "no", non_positive, er_bad, mred_bad, nmed_bad,
                      max_ed31, amlp::percent4(s.er.min), amlp::percent4(s.er.max),
                      amlp::percent4(s.mred.min), amlp::percent4(s.mred.max),
                      amlp::percent4(s.nmed.min), amlp::percent4(s.nmed.max))};
}

Verdict sign_magnitude(Context&) {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<std::int64_t> acc_d(-(1 << 20) + 1, (1 << 20) - 1);
  std::uniform_int_distribution<std::int64_t> p_d(-16129, 16129);
  int acc_failures = 0;
  for (int i = 0; i < 100000; ++i) {
    const std::int64_t a = acc_d(rng);
    const std::int64_t p = p_d(rng);
    const auto got = amlp::acc_add(amlp::SignedAcc::from_value(a),
                                   amlp::Product15::from_value(p));
    acc_failures += got.value() != amlp::testing::saturate(a + p);
  }
  int mac_failures = 0;
  std::uniform_int_distribution<int> len_d(1, 62);
  for (int i = 0; i < 100000; ++i) {
    const int n = len_d(rng);
    std::vector<amlp::SignMag8> x, w;
    for (int k = 0; k < n; ++k) {
      x.push_back(amlp::testing::random_sm8(rng));
      w.push_back(amlp::testing::random_sm8(rng));
    }
    const std::int64_t expected = amlp::testing::reference_preactivation(
        amlp::testing::ints(x), amlp::testing::ints(w), 0, 0, 0);
    mac_failures += amlp::mac_reduce(x, w, MultConfig::exact()).value() != expected;
  }
  return {acc_failures == 0 && mac_failures == 0,
          fmt::format("acc_add {} / 100000 failures, mac_reduce {} / 100000 failures",
                      acc_failures, mac_failures)};
}

Verdict datapath_equivalence(Context& ctx) {
  std::mt19937_64 rng(5);
  amlp::NetworkModel model;
  std::vector<amlp::LabeledFeatures> images;
  std::string source;
  if (ctx.has_mnist()) {
    model = ctx.network().quantized.model;
    const auto& test = ctx.data().test;
    images.assign(test.begin(), test.begin() + 1000);
    source = "trained model, first 1000 MNIST test images";
  } else {
    model = amlp::testing::random_model(rng);
    for (int i = 0; i < 1000; ++i) images.push_back({amlp::testing::random_features(rng), 0});
    source = "random model and images (MNIST unavailable)";
  }
  std::set<unsigned> masks;
  while (masks.size() < 5) masks.insert(static_cast<unsigned>(rng() % 32));

  int mismatches = 0;
  int trace_errors = 0;
  int cycle_errors = 0;
  for (unsigned mask : masks) {
    const amlp::RunResult run = amlp::run_dataset(model, images, MultConfig(mask), true);
    for (std::size_t i = 0; i < images.size(); ++i) {
      mismatches += run.predictions[i].label !=
                    amlp::testing::reference_classify(model, images[i].features, mask);
      cycle_errors += run.predictions[i].cycles != 220;
    }
    if (run.trace.size() != 4 * images.size() + 1) {
      ++trace_errors;
    } else {
      for (std::size_t i = 0; i + 1 < run.trace.size(); ++i)
        trace_errors += run.trace[i] != static_cast<amlp::FsmState>(i % 4);
      trace_errors += run.trace.back() != amlp::FsmState::kS4;
    }
    cycle_errors += run.total_cycles != 220 * images.size();
  }
  std::string mask_list;
  for (unsigned m : masks) mask_list += (mask_list.empty() ? "" : ",") + std::to_string(m);
  return {mismatches == 0 && trace_errors == 0 && cycle_errors == 0,
          fmt::format("masks {{{}}}: {} label mismatches, {} trace errors, {} cycle errors "
                      "({})",
                      mask_list, mismatches, trace_errors, cycle_errors, source)};
}

Verdict end_to_end_accuracy(Context& ctx) {
  if (!ctx.has_mnist()) return {false, ctx.missing_mnist()};
  const amlp::TrainedNetwork& net = ctx.network();
  const auto start = Clock::now();
  const amlp::SweepResult sweep = amlp::run_sweep(net.quantized.model, ctx.data().test);
  const double t = seconds_since(start);
  const double acc0 = sweep.rows[0].accuracy;
  const double acc31 = sweep.rows[31].accuracy;
  const double avg = sweep.summary.avg_accuracy;
  const bool pass = acc0 >= 0.85 && std::abs(acc0 - acc31) <= 0.05 &&
                    std::abs(acc0 - avg) <= 0.03 && t <= 600.0;
  return {pass, fmt::format("mask 0 {}% (>= 85), mask 31 {}% (within 5 pts), average {}% "
                            "(within 3 pts), worst {}% at mask {}; sweep {:.1f} s over {} "
                            "images",
                            amlp::percent4(acc0), amlp::percent4(acc31), amlp::percent4(avg),
                            amlp::percent4(sweep.summary.min_accuracy),
                            sweep.summary.min_accuracy_config, t, sweep.summary.images)};
}

Verdict power_proxy(Context&) {
  int hierarchy_bad = 0;
  int monotone_bad = 0;
  double avg = 0.0;
  for (unsigned m = 1; m < 32; ++m) {
    const amlp::Savings s = amlp::savings_pct(MultConfig(m));
    hierarchy_bad += !(s.multiplier >= s.mac && s.mac >= s.neuron && s.neuron >= s.network);
    avg += s.network;
  }
  avg /= 31.0;
  for (unsigned m1 = 0; m1 < 32; ++m1)
    for (unsigned m2 = 0; m2 < 32; ++m2)
      if ((m1 & m2) == m1) {
        const amlp::Savings a = amlp::savings_pct(MultConfig(m1));
        const amlp::Savings b = amlp::savings_pct(MultConfig(m2));
        monotone_bad += b.multiplier < a.multiplier || b.mac < a.mac ||
                        b.neuron < a.neuron || b.network < a.network;
      }
  const amlp::Savings full = amlp::savings_pct(MultConfig(31));
  return {hierarchy_bad == 0 && monotone_bad == 0 && full.network >= 0.08 &&
              full.network <= 0.15 && avg > 0.0,
          fmt::format("mask 31 savings: multiplier {}% MAC {}% neuron {}% network {}% "
                      "(want 8-15); average network {}%; {} hierarchy and {} monotonicity "
                      "violations",
                      amlp::percent4(full.multiplier), amlp::percent4(full.mac),
                      amlp::percent4(full.neuron), amlp::percent4(full.network),
                      amlp::percent4(avg), hierarchy_bad, monotone_bad)};
}

Verdict model_round_trip(Context& ctx) {
  std::mt19937_64 rng(8);
  const amlp::NetworkModel model =
      ctx.has_mnist() ? ctx.network().quantized.model : amlp::testing::random_model(rng);
  const auto path = std::filesystem::temp_directory_path() /
                    fmt::format("amlp_acceptance_{}.amlp", rng());
  amlp::export_model(model, path);
  const bool exact = amlp::import_model(path) == model;
  std::filesystem::remove(path);

  const std::vector<std::uint8_t> good = amlp::serialize_model(model);
  std::uniform_int_distribution<std::size_t> pos_d(0, good.size() - 1);
  std::uniform_int_distribution<int> flip_d(1, 255);
  int detected = 0;
  int crc_detected = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::uint8_t> bytes = good;
    bytes[pos_d(rng)] ^= static_cast<std::uint8_t>(flip_d(rng));
    try {
      amlp::deserialize_model(bytes);
    } catch (const amlp::ModelLoadError& e) {
      ++detected;
      crc_detected += e.kind() == amlp::LoadErrorKind::kChecksumMismatch;
    }
  }
  return {exact && detected == 1000,
          fmt::format("round trip {}; {} / 1000 flips detected ({} by checksum, the rest "
                      "by magic/version checks)",
                      exact ? "field-exact" : "MISMATCH", detected, crc_detected)};
}

Verdict trainer_gradient(Context& ctx) {
  if (!ctx.has_mnist()) return {false, ctx.missing_mnist()};
  const amlp::TrainedNetwork& net = ctx.network();
  const amlp::FloatMlp& m = net.float_result.model;
  const std::span<const amlp::LabeledFeatures> batch =
      std::span(ctx.data().train).first(5);

  amlp::FloatMlp grad;
  amlp::loss_and_gradient(m, batch, grad);
  amlp::FloatMlp probe = m;
  constexpr double kH = 1e-6;
  double diff_sq = 0.0, ga_sq = 0.0, gn_sq = 0.0;
  auto params = probe.blocks();
  const auto analytic = std::as_const(grad).blocks();
  for (std::size_t b = 0; b < params.size(); ++b) {
    for (std::size_t i = 0; i < params[b].size(); ++i) {
      const double saved = params[b][i];
      params[b][i] = saved + kH;
      const double up = amlp::mean_loss(probe, batch);
      params[b][i] = saved - kH;
      const double down = amlp::mean_loss(probe, batch);
      params[b][i] = saved;
      const double numeric = (up - down) / (2 * kH);
      diff_sq += (numeric - analytic[b][i]) * (numeric - analytic[b][i]);
      ga_sq += analytic[b][i] * analytic[b][i];
      gn_sq += numeric * numeric;
    }
  }
  const double denom = std::max(std::sqrt(ga_sq), std::sqrt(gn_sq));
  const double rel = denom > 0.0 ? std::sqrt(diff_sq) / denom : 0.0;
  const double acc = net.float_test_accuracy;
  return {rel < 1e-4 && acc >= 0.90,
          fmt::format("gradient relative error {:.3e} on 5 training samples (< 1e-4); "
                      "float test accuracy {}% (>= 90)",
                      rel, amlp::percent4(acc))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-9"};
  int only = 0;
  std::string mnist_dir;
  if (const char* env = std::getenv("AMLP_MNIST_DIR")) mnist_dir = env;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 9));
  app.add_option("--mnist-dir", mnist_dir, "MNIST IDX directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Verdict(Context&)>>> criteria = {
      {"multiplier exactness", multiplier_exactness},
      {"under-approximation and mask monotonicity", under_approximation_and_monotonicity},
      {"error-metric oracle", error_metric_oracle},
      {"sign-magnitude correctness", sign_magnitude},
      {"datapath equivalence", datapath_equivalence},
      {"end-to-end accuracy", end_to_end_accuracy},
      {"power-proxy structure", power_proxy},
      {"model file round trip", model_round_trip},
      {"trainer gradient check", trainer_gradient},
  };

  Context ctx(mnist_dir);
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    Verdict v;
    try {
      v = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      v = {false, fmt::format("exception: {}", e.what())};
    }
    fmt::print("{} {} {}: {}\n", v.pass ? "PASS" : "FAIL", id, criteria[i].first, v.detail);
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
