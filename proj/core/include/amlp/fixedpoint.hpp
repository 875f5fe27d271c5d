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

// Sign-magnitude number formats used throughout the datapath.
//
//   SignMag8   1 sign + 7 magnitude bits   operands, biases, activations
//   Product15  1 sign + 14 magnitude bits  multiplier output
//   SignedAcc  1 sign + 20 magnitude bits  MAC accumulator
//
// Every format keeps a single zero: a zero magnitude always carries sign 0.

#ifndef AMLP_FIXEDPOINT_HPP_
#define AMLP_FIXEDPOINT_HPP_

#include <cstdint>
#include <string>

#include "amlp/error.hpp"

namespace amlp {

template <std::uint32_t MaxMag, typename Rep>
class SignMagnitude {
 public:
  using rep_type = Rep;
  static constexpr std::uint32_t kMaxMagnitude = MaxMag;

  constexpr SignMagnitude() noexcept = default;

  // Throws RangeError when mag exceeds the format. Negative zero is
  // normalized to +0.
  static constexpr SignMagnitude from_parts(bool negative, std::uint32_t mag) {
    if (mag > MaxMag) {
      throw RangeError("sign-magnitude: magnitude " + std::to_string(mag) +
                       " exceeds " + std::to_string(MaxMag));
    }
    return unchecked(negative, mag);
  }

  static constexpr SignMagnitude from_value(std::int64_t v) {
    const bool negative = v < 0;
    const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-v)
                                       : static_cast<std::uint64_t>(v);
    if (mag > MaxMag) {
      throw RangeError("sign-magnitude: value " + std::to_string(v) +
                       " out of range +/-" + std::to_string(MaxMag));
    }
    return unchecked(negative, static_cast<std::uint32_t>(mag));
  }

  // Caller guarantees mag <= MaxMag.
  static constexpr SignMagnitude unchecked(bool negative,
                                           std::uint32_t mag) noexcept {
    SignMagnitude r;
    r.mag_ = static_cast<Rep>(mag);
    r.negative_ = negative && mag != 0;
    return r;
  }

  constexpr bool negative() const noexcept { return negative_; }
  constexpr std::uint32_t sign_bit() const noexcept { return negative_ ? 1 : 0; }
  constexpr Rep magnitude() const noexcept { return mag_; }

  constexpr std::int64_t value() const noexcept {
    return negative_ ? -static_cast<std::int64_t>(mag_)
                     : static_cast<std::int64_t>(mag_);
  }

  friend constexpr bool operator==(SignMagnitude, SignMagnitude) = default;

 private:
  bool negative_ = false;
  Rep mag_ = 0;
};

using SignMag8 = SignMagnitude<127, std::uint8_t>;
using Product15 = SignMagnitude<127 * 127, std::uint16_t>;
using SignedAcc = SignMagnitude<(1u << 20) - 1, std::uint32_t>;

inline constexpr std::uint32_t kMaxOperand = SignMag8::kMaxMagnitude;
inline constexpr std::uint32_t kMaxProduct = Product15::kMaxMagnitude;
inline constexpr std::uint32_t kAccMax = SignedAcc::kMaxMagnitude;

// Integer in [-127, 127] to SignMag8; RangeError otherwise.
SignMag8 encode(int v);
int decode(SignMag8 x) noexcept;

// Byte layout: bit 7 sign, bits 6..0 magnitude. 0x80 reads back as +0.
constexpr SignMag8 from_byte(std::uint8_t byte) noexcept {
  return SignMag8::unchecked((byte & 0x80u) != 0, byte & 0x7Fu);
}
constexpr std::uint8_t to_byte(SignMag8 x) noexcept {
  return static_cast<std::uint8_t>((x.sign_bit() << 7) | x.magnitude());
}

// Sign-magnitude accumulate: same signs add, opposite signs subtract the
// smaller magnitude from the larger and keep the larger's sign. The
// magnitude saturates at 2^20 - 1. |p| must not exceed 2^20 - 1.
SignedAcc acc_add(SignedAcc acc, std::int64_t p);
SignedAcc acc_add(SignedAcc acc, Product15 p) noexcept;

// min(mag >> shift, 127); shift in [0, 20].
std::uint8_t rescale_clamp(std::uint32_t mag, int shift);

}  // namespace amlp

#endif  // AMLP_FIXEDPOINT_HPP_
