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

#include "amlp/fixedpoint.hpp"

#include <algorithm>

namespace amlp {

SignMag8 encode(int v) { return SignMag8::from_value(v); }

int decode(SignMag8 x) noexcept { return static_cast<int>(x.value()); }

namespace {

SignedAcc add_magnitudes(bool acc_neg, std::uint32_t acc_mag, bool p_neg,
                         std::uint32_t p_mag) noexcept {
  if (acc_neg == p_neg) {
    const std::uint32_t sum = acc_mag + p_mag;
    return SignedAcc::unchecked(acc_neg, std::min(sum, kAccMax));
  }
  // Subtractor plus magnitude comparator; the larger operand sets the sign.
  if (acc_mag >= p_mag) {
    return SignedAcc::unchecked(acc_neg, acc_mag - p_mag);
  }
  return SignedAcc::unchecked(p_neg, p_mag - acc_mag);
}

}  // namespace

SignedAcc acc_add(SignedAcc acc, std::int64_t p) {
  const bool p_neg = p < 0;
  const std::uint64_t p_mag = p_neg ? static_cast<std::uint64_t>(-p)
                                    : static_cast<std::uint64_t>(p);
  if (p_mag > kAccMax) {
    throw RangeError("acc_add: addend " + std::to_string(p) +
                     " exceeds 21-bit sign-magnitude range");
  }
  return add_magnitudes(acc.negative(), acc.magnitude(), p_neg,
                        static_cast<std::uint32_t>(p_mag));
}

SignedAcc acc_add(SignedAcc acc, Product15 p) noexcept {
  return add_magnitudes(acc.negative(), acc.magnitude(), p.negative(),
                        p.magnitude());
}

std::uint8_t rescale_clamp(std::uint32_t mag, int shift) {
  if (shift < 0 || shift > 20) {
    throw RangeError("rescale_clamp: shift " + std::to_string(shift) +
                     " outside [0, 20]");
  }
  return static_cast<std::uint8_t>(std::min<std::uint32_t>(mag >> shift, kMaxOperand));
}

}  // namespace amlp
