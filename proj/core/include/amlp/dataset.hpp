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

// MNIST ingestion and the 784 -> 196 -> 62 feature reduction:
// 2x2 average pooling, top-variance position selection, 8-bit quantization.

#ifndef AMLP_DATASET_HPP_
#define AMLP_DATASET_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "amlp/fixedpoint.hpp"
#include "amlp/topology.hpp"

namespace amlp {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

using RawImage = std::array<std::uint8_t, kImagePixels>;
using PooledImage = std::array<std::uint8_t, kPooledPixels>;
using FeatureVector = std::array<SignMag8, kInputs>;

struct LabeledFeatures {
  FeatureVector features;
  std::uint8_t label = 0;
};

// FormatError on bad magic or geometry, TruncationError on short payloads.
std::vector<RawImage> parse_idx_images(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes);

PooledImage pool2x2(const RawImage& img) noexcept;

// Indices of the `count` highest population-variance positions, ties to the
// lower index, returned ascending.
std::vector<std::uint16_t> select_features(std::span<const PooledImage> pooled,
                                           std::size_t count = kInputs);

// mag = round_half_up(v * 127 / 255), sign 0.
std::uint8_t quantize_pixel(std::uint8_t v) noexcept;
FeatureVector quantize_input(const PooledImage& pooled,
                             std::span<const std::uint16_t> indices);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

enum class MnistSplit { kTrain, kTest };

struct MnistData {
  std::vector<PooledImage> pooled;
  std::vector<std::uint8_t> labels;
};

// Reads the standard file pair (train-* or t10k-*) from dir and pools it.
MnistData load_mnist(const std::filesystem::path& dir, MnistSplit split);

std::vector<LabeledFeatures> make_features(const MnistData& data,
                                           std::span<const std::uint16_t> indices);

}  // namespace amlp

#endif  // AMLP_DATASET_HPP_
