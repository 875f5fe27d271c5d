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

#include "amlp/approx_mult.hpp"

#include <bit>
#include <string>

namespace amlp {

std::vector<MultConfig> all_configs() {
  std::vector<MultConfig> out;
  out.reserve(kConfigCount);
  for (unsigned m = 0; m < kConfigCount; ++m) out.emplace_back(m);
  return out;
}

ColumnPlan approx_columns(MultConfig cfg) noexcept {
  ColumnPlan plan;
  for (int bit = 0; bit < kApproxColumns / 2; ++bit) {
    if ((cfg.mask() >> bit) & 1u) {
      plan.set(2 * bit);
      plan.set(2 * bit + 1);
    }
  }
  return plan;
}

std::uint16_t multiply_mag(std::uint32_t a, std::uint32_t b, MultConfig cfg) {
  if (a > kMaxOperand || b > kMaxOperand) {
    throw RangeError("multiply_mag: operands " + std::to_string(a) + ", " +
                     std::to_string(b) + " exceed 7 bits");
  }
  // Column c gathers a_i & b_j for i + j = c, as a bit vector over i.
  std::array<std::uint32_t, kProductColumns> column{};
  for (int i = 0; i < 7; ++i) {
    if (!((a >> i) & 1u)) continue;
    for (int j = 0; j < 7; ++j) {
      if ((b >> j) & 1u) column[i + j] |= 1u << i;
    }
  }

  const ColumnPlan plan = approx_columns(cfg);
  std::uint32_t result = 0;
  std::uint32_t carry = 0;
  for (int c = 0; c < kProductColumns; ++c) {
    std::uint32_t bit;
    if (plan.test(c)) {
      bit = column[c] != 0 ? 1u : 0u;
      carry = 0;
    } else {
      const std::uint32_t total =
          static_cast<std::uint32_t>(std::popcount(column[c])) + carry;
      bit = total & 1u;
      carry = total >> 1;
    }
    result |= bit << c;
  }
  // 127 * 127 < 2^14, so an exact array leaves no carry past column 13.
  return static_cast<std::uint16_t>(result);
}

Product15 multiply_signed(SignMag8 a, SignMag8 b, MultConfig cfg) noexcept {
  const std::uint16_t mag = multiply_mag(a.magnitude(), b.magnitude(), cfg);
  return Product15::unchecked(a.negative() != b.negative(), mag);
}

ProductTable::ProductTable() : table_(std::size_t{kConfigCount} << 14) {
  for (unsigned m = 0; m < kConfigCount; ++m) {
    const MultConfig cfg(m);
    for (std::uint32_t a = 0; a <= kMaxOperand; ++a) {
      for (std::uint32_t b = 0; b <= kMaxOperand; ++b) {
        table_[(std::size_t{m} << 14) | (a << 7) | b] = multiply_mag(a, b, cfg);
      }
    }
  }
}

const ProductTable& ProductTable::instance() {
  static const ProductTable table;
  return table;
}

}  // namespace amlp
