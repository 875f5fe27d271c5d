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

#include "amlp/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>

namespace amlp {
namespace {

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t off) {
  return (std::uint32_t{bytes[off]} << 24) | (std::uint32_t{bytes[off + 1]} << 16) |
         (std::uint32_t{bytes[off + 2]} << 8) | std::uint32_t{bytes[off + 3]};
}

std::string hex32(std::uint32_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s = "0x";
  for (int shift = 28; shift >= 0; shift -= 4) s += digits[(v >> shift) & 0xF];
  return s;
}

}  // namespace

std::vector<RawImage> parse_idx_images(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 16) throw TruncationError("idx images: header shorter than 16 bytes");
  const std::uint32_t magic = read_be32(bytes, 0);
  if (magic != kIdxImageMagic) {
    throw FormatError("idx images: bad magic " + hex32(magic));
  }
  const std::uint32_t count = read_be32(bytes, 4);
  const std::uint32_t rows = read_be32(bytes, 8);
  const std::uint32_t cols = read_be32(bytes, 12);
  if (rows != kImageSide || cols != kImageSide) {
    throw FormatError("idx images: expected 28x28, got " + std::to_string(rows) +
                      "x" + std::to_string(cols));
  }
  const std::uint64_t need = 16 + std::uint64_t{count} * kImagePixels;
  if (bytes.size() < need) {
    throw TruncationError("idx images: payload holds " +
                          std::to_string(bytes.size() - 16) + " bytes, header promises " +
                          std::to_string(need - 16));
  }
  std::vector<RawImage> images(count);
  for (std::uint32_t n = 0; n < count; ++n) {
    const auto src = bytes.subspan(16 + std::size_t{n} * kImagePixels, kImagePixels);
    std::copy(src.begin(), src.end(), images[n].begin());
  }
  return images;
}

std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8) throw TruncationError("idx labels: header shorter than 8 bytes");
  const std::uint32_t magic = read_be32(bytes, 0);
  if (magic != kIdxLabelMagic) {
    throw FormatError("idx labels: bad magic " + hex32(magic));
  }
  const std::uint32_t count = read_be32(bytes, 4);
  if (bytes.size() < 8 + std::uint64_t{count}) {
    throw TruncationError("idx labels: payload holds " + std::to_string(bytes.size() - 8) +
                          " labels, header promises " + std::to_string(count));
  }
  std::vector<std::uint8_t> labels(bytes.begin() + 8, bytes.begin() + 8 + count);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > 9) {
      throw FormatError("idx labels: label " + std::to_string(labels[i]) +
                        " at index " + std::to_string(i));
    }
  }
  return labels;
}

PooledImage pool2x2(const RawImage& img) noexcept {
  PooledImage out{};
  for (std::size_t r = 0; r < kPooledSide; ++r) {
    for (std::size_t c = 0; c < kPooledSide; ++c) {
      const std::size_t top = 2 * r * kImageSide + 2 * c;
      const unsigned sum = img[top] + img[top + 1] + img[top + kImageSide] +
                           img[top + kImageSide + 1];
      out[r * kPooledSide + c] = static_cast<std::uint8_t>(sum / 4);
    }
  }
  return out;
}

std::vector<std::uint16_t> select_features(std::span<const PooledImage> pooled,
                                           std::size_t count) {
  if (pooled.empty()) throw ContractError("select_features: empty training set");
  if (count > kPooledPixels) throw ContractError("select_features: count > 196");

  // Exact integer moments: n * sum(x^2) - sum(x)^2 = n^2 * variance.
  std::array<std::uint64_t, kPooledPixels> sum{};
  std::array<std::uint64_t, kPooledPixels> sum_sq{};
  for (const PooledImage& p : pooled) {
    for (std::size_t i = 0; i < kPooledPixels; ++i) {
      sum[i] += p[i];
      sum_sq[i] += std::uint64_t{p[i]} * p[i];
    }
  }
  const std::uint64_t n = pooled.size();
  if (n > (std::uint64_t{1} << 24)) {
    throw ContractError("select_features: training set too large for exact moments");
  }
  std::array<std::uint64_t, kPooledPixels> scaled_var{};
  for (std::size_t i = 0; i < kPooledPixels; ++i) {
    scaled_var[i] = n * sum_sq[i] - sum[i] * sum[i];
  }

  std::vector<std::uint16_t> order(kPooledPixels);
  std::iota(order.begin(), order.end(), std::uint16_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::uint16_t a, std::uint16_t b) {
    return scaled_var[a] > scaled_var[b];
  });
  order.resize(count);
  std::sort(order.begin(), order.end());
  return order;
}

std::uint8_t quantize_pixel(std::uint8_t v) noexcept {
  // floor((254 v + 255) / 510) == floor(v * 127 / 255 + 1/2)
  return static_cast<std::uint8_t>((254u * v + 255u) / 510u);
}

FeatureVector quantize_input(const PooledImage& pooled,
                             std::span<const std::uint16_t> indices) {
  if (indices.size() != kInputs) {
    throw ContractError("quantize_input: expected 62 indices, got " +
                        std::to_string(indices.size()));
  }
  FeatureVector out;
  for (std::size_t k = 0; k < kInputs; ++k) {
    if (indices[k] >= kPooledPixels) {
      throw ContractError("quantize_input: index " + std::to_string(indices[k]) +
                          " outside pooled grid");
    }
    out[k] = SignMag8::unchecked(false, quantize_pixel(pooled[indices[k]]));
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

MnistData load_mnist(const std::filesystem::path& dir, MnistSplit split) {
  const std::string prefix = split == MnistSplit::kTrain ? "train" : "t10k";
  const auto image_path = dir / (prefix + "-images-idx3-ubyte");
  const auto label_path = dir / (prefix + "-labels-idx1-ubyte");

  MnistData data;
  try {
    const auto images = parse_idx_images(read_file(image_path));
    data.labels = parse_idx_labels(read_file(label_path));
    if (images.size() != data.labels.size()) {
      throw FormatError(std::to_string(images.size()) + " images vs " +
                        std::to_string(data.labels.size()) + " labels");
    }
    data.pooled.reserve(images.size());
    for (const RawImage& img : images) data.pooled.push_back(pool2x2(img));
  } catch (const FormatError& e) {
    throw FormatError(dir.string() + ": " + e.what());
  }
  return data;
}

std::vector<LabeledFeatures> make_features(const MnistData& data,
                                           std::span<const std::uint16_t> indices) {
  std::vector<LabeledFeatures> out;
  out.reserve(data.pooled.size());
  for (std::size_t i = 0; i < data.pooled.size(); ++i) {
    out.push_back({quantize_input(data.pooled[i], indices), data.labels[i]});
  }
  return out;
}

}  // namespace amlp
