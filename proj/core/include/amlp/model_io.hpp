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

// Model file, little-endian:
//
//   offset  size       field
//   0       4          magic "AMLP"
//   4       2          version (1)
//   6       2 x 3      n_in (62), n_hidden (30), n_out (10)
//   12      1          hidden act_shift
//   13      1          hidden bias_shift
//   14      1          output bias_shift
//   15      1          reserved (0)
//   16      62 x 2     feature indices
//   140     30 x 62    hidden weights, row-major, sign-magnitude bytes
//   2000    30         hidden biases
//   2030    10 x 30    output weights
//   2330    10         output biases
//   2340    4          CRC-32 of bytes [0, 2340)

#ifndef AMLP_MODEL_IO_HPP_
#define AMLP_MODEL_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "amlp/datapath.hpp"

namespace amlp {

inline constexpr std::uint16_t kModelFormatVersion = 1;
inline constexpr std::size_t kModelHeaderSize = 16;
inline constexpr std::size_t kModelFileSize =
    kModelHeaderSize + 2 * kInputs + kHidden * kInputs + kHidden +
    kOutputs * kHidden + kOutputs + 4;
static_assert(kModelFileSize == 2344);

std::uint32_t crc32(std::span<const std::uint8_t> bytes) noexcept;

// ContractError if the model is malformed.
std::vector<std::uint8_t> serialize_model(const NetworkModel& model);

// ModelLoadError with a kind per failure: truncation, magic, version,
// checksum, then structural checks.
NetworkModel deserialize_model(std::span<const std::uint8_t> bytes);

void export_model(const NetworkModel& model, const std::filesystem::path& path);
NetworkModel import_model(const std::filesystem::path& path);

}  // namespace amlp

#endif  // AMLP_MODEL_IO_HPP_
