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

#include "amlp/model_io.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <string>

#include "amlp/dataset.hpp"

namespace amlp {

const char* to_string(LoadErrorKind kind) noexcept {
  switch (kind) {
    case LoadErrorKind::kTruncated: return "truncated model file";
    case LoadErrorKind::kBadMagic: return "bad magic";
    case LoadErrorKind::kVersionMismatch: return "unsupported version";
    case LoadErrorKind::kChecksumMismatch: return "checksum mismatch";
    case LoadErrorKind::kMalformed: return "malformed model";
  }
  return "model load error";
}

namespace {

constexpr char kMagic[4] = {'A', 'M', 'L', 'P'};

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) {
    out_.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int s = 0; s < 32; s += 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
  }
  void sm8(SignMag8 v) { out_.push_back(to_byte(v)); }
  std::vector<std::uint8_t>& bytes() { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}
  std::uint8_t u8() { return in_[pos_++]; }
  std::uint16_t u16() {
    const std::uint16_t v = static_cast<std::uint16_t>(in_[pos_] | (in_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int s = 0; s < 32; s += 8) v |= std::uint32_t{in_[pos_++]} << s;
    return v;
  }
  SignMag8 sm8() { return from_byte(in_[pos_++]); }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> bytes) noexcept {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  return static_cast<std::uint32_t>(
      ::crc32(crc, bytes.data(), static_cast<uInt>(bytes.size())));
}

std::vector<std::uint8_t> serialize_model(const NetworkModel& model) {
  model.validate();
  Writer w;
  for (char c : kMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u16(kModelFormatVersion);
  w.u16(kInputs);
  w.u16(kHidden);
  w.u16(kOutputs);
  w.u8(static_cast<std::uint8_t>(model.hidden_act_shift()));
  w.u8(static_cast<std::uint8_t>(model.hidden_bias_shift()));
  w.u8(static_cast<std::uint8_t>(model.output_bias_shift()));
  w.u8(0);
  for (std::uint16_t idx : model.feature_indices) w.u16(idx);
  for (const NeuronParams& p : model.hidden) {
    for (SignMag8 v : p.weights) w.sm8(v);
  }
  for (const NeuronParams& p : model.hidden) w.sm8(p.bias);
  for (const NeuronParams& p : model.output) {
    for (SignMag8 v : p.weights) w.sm8(v);
  }
  for (const NeuronParams& p : model.output) w.sm8(p.bias);
  w.u32(crc32(w.bytes()));
  return std::move(w.bytes());
}

NetworkModel deserialize_model(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kModelFileSize) {
    throw ModelLoadError(LoadErrorKind::kTruncated,
                         std::to_string(bytes.size()) + " bytes, expected " +
                             std::to_string(kModelFileSize));
  }
  if (std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw ModelLoadError(LoadErrorKind::kBadMagic, "expected \"AMLP\"");
  }
  Reader r(bytes);
  for (std::size_t i = 0; i < sizeof kMagic; ++i) r.u8();
  const std::uint16_t version = r.u16();
  if (version != kModelFormatVersion) {
    throw ModelLoadError(LoadErrorKind::kVersionMismatch,
                         "version " + std::to_string(version) + ", reader supports " +
                             std::to_string(kModelFormatVersion));
  }
  if (bytes.size() != kModelFileSize) {
    throw ModelLoadError(LoadErrorKind::kMalformed,
                         std::to_string(bytes.size() - kModelFileSize) +
                             " trailing bytes");
  }
  const auto body = bytes.first(kModelFileSize - 4);
  Reader tail(bytes.subspan(kModelFileSize - 4));
  const std::uint32_t stored = tail.u32();
  if (stored != crc32(body)) {
    throw ModelLoadError(LoadErrorKind::kChecksumMismatch, "CRC-32 does not match payload");
  }

  const std::uint16_t n_in = r.u16();
  const std::uint16_t n_hidden = r.u16();
  const std::uint16_t n_out = r.u16();
  if (n_in != kInputs || n_hidden != kHidden || n_out != kOutputs) {
    throw ModelLoadError(LoadErrorKind::kMalformed,
                         "topology " + std::to_string(n_in) + "-" +
                             std::to_string(n_hidden) + "-" + std::to_string(n_out));
  }
  const int act_shift = r.u8();
  const int hidden_bias_shift = r.u8();
  const int output_bias_shift = r.u8();
  if (r.u8() != 0) throw ModelLoadError(LoadErrorKind::kMalformed, "reserved byte set");

  NetworkModel m;
  m.feature_indices.resize(kInputs);
  for (auto& idx : m.feature_indices) idx = r.u16();
  m.hidden.resize(kHidden);
  for (NeuronParams& p : m.hidden) {
    p.weights.resize(kInputs);
    for (SignMag8& v : p.weights) v = r.sm8();
    p.act_shift = act_shift;
    p.bias_shift = hidden_bias_shift;
  }
  for (NeuronParams& p : m.hidden) p.bias = r.sm8();
  m.output.resize(kOutputs);
  for (NeuronParams& p : m.output) {
    p.weights.resize(kHidden);
    for (SignMag8& v : p.weights) v = r.sm8();
    p.bias_shift = output_bias_shift;
  }
  for (NeuronParams& p : m.output) p.bias = r.sm8();

  try {
    m.validate();
  } catch (const ContractError& e) {
    throw ModelLoadError(LoadErrorKind::kMalformed, e.what());
  }
  return m;
}

void export_model(const NetworkModel& model, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = serialize_model(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

NetworkModel import_model(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  try {
    return deserialize_model(bytes);
  } catch (const ModelLoadError& e) {
    throw ModelLoadError(e.kind(), path.string() + ": " + e.detail());
  }
}

}  // namespace amlp
