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

#include "amlp/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace amlp {
namespace {

using Input = std::array<double, kInputs>;

struct Activations {
  std::array<double, kHidden> z1;
  std::array<double, kHidden> h;
  std::array<double, kOutputs> z2;
};

void forward(const FloatMlp& m, const double* x, Activations& a) {
  for (std::size_t j = 0; j < kHidden; ++j) {
    const double* row = &m.w1[j * kInputs];
    double s = m.b1[j];
    for (std::size_t i = 0; i < kInputs; ++i) s += row[i] * x[i];
    a.z1[j] = s;
    a.h[j] = s > 0.0 ? s : 0.0;
  }
  for (std::size_t k = 0; k < kOutputs; ++k) {
    const double* row = &m.w2[k * kHidden];
    double s = m.b2[k];
    for (std::size_t j = 0; j < kHidden; ++j) s += row[j] * a.h[j];
    a.z2[k] = s;
  }
}

// Cross-entropy of one sample; when grad is non-null, adds its gradient
// scaled by `weight`.
double sample_loss(const FloatMlp& m, const double* x, int label, FloatMlp* grad,
                   double weight) {
  Activations a;
  forward(m, x, a);
  const double zmax = *std::max_element(a.z2.begin(), a.z2.end());
  double denom = 0.0;
  std::array<double, kOutputs> p;
  for (std::size_t k = 0; k < kOutputs; ++k) {
    p[k] = std::exp(a.z2[k] - zmax);
    denom += p[k];
  }
  const double loss = std::log(denom) + zmax - a.z2[label];
  if (grad == nullptr) return loss;

  std::array<double, kOutputs> dz2;
  for (std::size_t k = 0; k < kOutputs; ++k) {
    dz2[k] = weight * (p[k] / denom - (static_cast<int>(k) == label ? 1.0 : 0.0));
  }
  std::array<double, kHidden> dh{};
  for (std::size_t k = 0; k < kOutputs; ++k) {
    grad->b2[k] += dz2[k];
    double* grow = &grad->w2[k * kHidden];
    const double* wrow = &m.w2[k * kHidden];
    for (std::size_t j = 0; j < kHidden; ++j) {
      grow[j] += dz2[k] * a.h[j];
      dh[j] += dz2[k] * wrow[j];
    }
  }
  for (std::size_t j = 0; j < kHidden; ++j) {
    if (a.z1[j] <= 0.0) continue;
    grad->b1[j] += dh[j];
    double* grow = &grad->w1[j * kInputs];
    for (std::size_t i = 0; i < kInputs; ++i) grow[i] += dh[j] * x[i];
  }
  return loss;
}

void zero(FloatMlp& m) {
  for (std::span<double> b : m.blocks()) std::fill(b.begin(), b.end(), 0.0);
}

std::vector<Input> scale_all(std::span<const LabeledFeatures> data) {
  std::vector<Input> xs;
  xs.reserve(data.size());
  for (const LabeledFeatures& ex : data) xs.push_back(scale_features(ex.features));
  return xs;
}

int predict(const FloatMlp& m, const double* x) {
  Activations a;
  forward(m, x, a);
  return static_cast<int>(std::max_element(a.z2.begin(), a.z2.end()) - a.z2.begin());
}

}  // namespace

std::array<double, kOutputs> FloatMlp::logits(std::span<const double, kInputs> x) const {
  Activations a;
  forward(*this, x.data(), a);
  return a.z2;
}

void TrainConfig::validate() const {
  if (epochs <= 0 || batch_size <= 0 || !(learning_rate > 0.0) ||
      !(momentum >= 0.0 && momentum < 1.0)) {
    throw ContractError("train config: epochs, batch size and learning rate must be "
                        "positive and momentum in [0, 1)");
  }
}

std::array<double, kInputs> scale_features(const FeatureVector& f) noexcept {
  std::array<double, kInputs> x;
  for (std::size_t i = 0; i < kInputs; ++i) x[i] = decode(f[i]) / 127.0;
  return x;
}

double mean_loss(const FloatMlp& m, std::span<const LabeledFeatures> batch) {
  if (batch.empty()) throw ContractError("mean_loss: empty batch");
  double total = 0.0;
  for (const LabeledFeatures& ex : batch) {
    const Input x = scale_features(ex.features);
    total += sample_loss(m, x.data(), ex.label, nullptr, 0.0);
  }
  return total / batch.size();
}

double loss_and_gradient(const FloatMlp& m, std::span<const LabeledFeatures> batch,
                         FloatMlp& grad) {
  if (batch.empty()) throw ContractError("loss_and_gradient: empty batch");
  zero(grad);
  const double w = 1.0 / batch.size();
  double total = 0.0;
  for (const LabeledFeatures& ex : batch) {
    const Input x = scale_features(ex.features);
    total += sample_loss(m, x.data(), ex.label, &grad, w);
  }
  return total / batch.size();
}

double float_accuracy(const FloatMlp& m, std::span<const LabeledFeatures> data) {
  if (data.empty()) return 0.0;
  std::size_t correct = 0;
  for (const LabeledFeatures& ex : data) {
    const Input x = scale_features(ex.features);
    if (predict(m, x.data()) == ex.label) ++correct;
  }
  return static_cast<double>(correct) / data.size();
}

TrainResult train_float(std::span<const LabeledFeatures> trainset,
                        const TrainConfig& tc) {
  tc.validate();
  if (trainset.empty()) throw ContractError("train_float: empty training set");

  std::mt19937_64 rng(tc.seed);
  TrainResult out;
  FloatMlp& m = out.model;
  // He-style uniform init scaled by fan-in; biases start at zero.
  auto init = [&rng](std::span<double> w, std::size_t fan_in) {
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in));
    std::uniform_real_distribution<double> dist(-limit, limit);
    for (double& v : w) v = dist(rng);
  };
  init(m.w1, kInputs);
  init(m.w2, kHidden);

  const std::vector<Input> xs = scale_all(trainset);
  std::vector<std::size_t> order(trainset.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  FloatMlp grad;
  FloatMlp velocity;
  zero(velocity);
  const std::size_t batch = static_cast<std::size_t>(tc.batch_size);
  for (int epoch = 0; epoch < tc.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t end = std::min(order.size(), start + batch);
      zero(grad);
      const double w = 1.0 / static_cast<double>(end - start);
      double loss = 0.0;
      for (std::size_t k = start; k < end; ++k) {
        const std::size_t idx = order[k];
        loss += sample_loss(m, xs[idx].data(), trainset[idx].label, &grad, w);
      }
      if (!std::isfinite(loss)) {
        throw TrainingError("train_float: non-finite loss in epoch " +
                            std::to_string(epoch + 1));
      }
      epoch_loss += loss;
      auto params = m.blocks();
      auto grads = grad.blocks();
      auto vel = velocity.blocks();
      for (std::size_t b = 0; b < params.size(); ++b) {
        for (std::size_t i = 0; i < params[b].size(); ++i) {
          vel[b][i] = tc.momentum * vel[b][i] - tc.learning_rate * grads[b][i];
          params[b][i] += vel[b][i];
        }
      }
    }
    out.final_loss = epoch_loss / static_cast<double>(order.size());
  }

  std::size_t correct = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (predict(m, xs[i].data()) == trainset[i].label) ++correct;
  }
  out.train_accuracy = static_cast<double>(correct) / xs.size();
  return out;
}

namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

SignMag8 quantize_weight(double w, double max_abs_w) {
  const long q = std::lround(w * 127.0 / max_abs_w);
  return SignMag8::from_value(std::clamp<long>(q, -127, 127));
}

struct BiasFit {
  int shift = 0;
  std::vector<SignMag8> biases;
};

// targets are biases expressed in accumulator units.
BiasFit fit_biases(std::span<const double> targets) {
  BiasFit best;
  double best_err = std::numeric_limits<double>::infinity();
  for (int shift = 0; shift <= kMaxBiasShift; ++shift) {
    const double step = std::ldexp(1.0, shift);
    BiasFit fit{shift, {}};
    double err = 0.0;
    for (double t : targets) {
      const long q = std::clamp<long>(std::lround(t / step), -127, 127);
      err += std::abs(t - static_cast<double>(q) * step);
      fit.biases.push_back(SignMag8::from_value(q));
    }
    if (err < best_err) {
      best_err = err;
      best = std::move(fit);
    }
  }
  return best;
}

}  // namespace

QuantizedMlp quantize_model(const FloatMlp& m,
                            std::span<const LabeledFeatures> calibration,
                            std::span<const std::uint16_t> feature_indices) {
  if (calibration.empty()) throw ContractError("quantize_model: empty calibration set");
  for (std::span<const double> b : m.blocks()) {
    for (double v : b) {
      if (!std::isfinite(v)) throw ContractError("quantize_model: non-finite parameter");
    }
  }
  const double max1 = max_abs(m.w1);
  const double max2 = max_abs(m.w2);
  if (max1 == 0.0 || max2 == 0.0) {
    throw DegenerateScaleError("quantize_model: all-zero weight layer");
  }

  QuantizedMlp out;
  QuantScales& s = out.scales;
  NetworkModel& net = out.model;
  net.feature_indices.assign(feature_indices.begin(), feature_indices.end());

  s.w1 = max1 / 127.0;
  s.hidden_acc = s.w1 / 127.0;  // inputs carry mag / 127
  std::vector<double> targets(kHidden);
  for (std::size_t j = 0; j < kHidden; ++j) targets[j] = m.b1[j] / s.hidden_acc;
  BiasFit hb = fit_biases(targets);
  net.hidden.resize(kHidden);
  for (std::size_t j = 0; j < kHidden; ++j) {
    NeuronParams& p = net.hidden[j];
    p.weights.reserve(kInputs);
    for (std::size_t i = 0; i < kInputs; ++i) {
      p.weights.push_back(quantize_weight(m.w1[j * kInputs + i], max1));
    }
    p.bias = hb.biases[j];
    p.bias_shift = hb.shift;
  }

  // Smallest activation shift that saturates at most 1% of the calibration
  // activations (negative pre-activations never saturate).
  std::array<std::uint64_t, kMaxActShift + 1> clipped{};
  for (const LabeledFeatures& ex : calibration) {
    for (const NeuronParams& p : net.hidden) {
      const SignedAcc acc = neuron_forward_raw(ex.features, p, MultConfig::exact());
      if (acc.negative()) continue;
      for (int sh = 0; sh <= kMaxActShift; ++sh) {
        if ((acc.magnitude() >> sh) > kMaxOperand) ++clipped[sh];
      }
    }
  }
  const double total = static_cast<double>(calibration.size() * kHidden);
  int act_shift = kMaxActShift;
  for (int sh = 0; sh <= kMaxActShift; ++sh) {
    if (static_cast<double>(clipped[sh]) <= kActClipBudget * total) {
      act_shift = sh;
      break;
    }
  }
  out.clipped_fraction = static_cast<double>(clipped[act_shift]) / total;
  for (NeuronParams& p : net.hidden) p.act_shift = act_shift;
  s.hidden_act = std::ldexp(s.hidden_acc, act_shift);

  s.w2 = max2 / 127.0;
  s.output_acc = s.w2 * s.hidden_act;
  targets.assign(kOutputs, 0.0);
  for (std::size_t k = 0; k < kOutputs; ++k) targets[k] = m.b2[k] / s.output_acc;
  BiasFit ob = fit_biases(targets);
  net.output.resize(kOutputs);
  for (std::size_t k = 0; k < kOutputs; ++k) {
    NeuronParams& p = net.output[k];
    p.weights.reserve(kHidden);
    for (std::size_t j = 0; j < kHidden; ++j) {
      p.weights.push_back(quantize_weight(m.w2[k * kHidden + j], max2));
    }
    p.bias = ob.biases[k];
    p.bias_shift = ob.shift;
    p.act_shift = 0;
  }
  net.validate();
  return out;
}

FloatMlp dequantize_model(const NetworkModel& model, const QuantScales& scales) {
  model.validate();
  FloatMlp m;
  for (std::size_t j = 0; j < kHidden; ++j) {
    const NeuronParams& p = model.hidden[j];
    for (std::size_t i = 0; i < kInputs; ++i) {
      m.w1[j * kInputs + i] = decode(p.weights[i]) * scales.w1;
    }
    m.b1[j] = std::ldexp(decode(p.bias), p.bias_shift) * scales.hidden_acc;
  }
  for (std::size_t k = 0; k < kOutputs; ++k) {
    const NeuronParams& p = model.output[k];
    for (std::size_t j = 0; j < kHidden; ++j) {
      m.w2[k * kHidden + j] = decode(p.weights[j]) * scales.w2;
    }
    m.b2[k] = std::ldexp(decode(p.bias), p.bias_shift) * scales.output_acc;
  }
  return m;
}

}  // namespace amlp
