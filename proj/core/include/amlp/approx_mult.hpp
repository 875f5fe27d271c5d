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

// 7x7 unsigned array multiplier with a 5-bit error-control input.
//
// The partial products pp(i, j) = a_i & b_j land in column i + j (columns
// 0..12, column 13 only receives a carry). Mask bit k selects columns 2k and
// 2k+1 for approximation:
//
//   exact column        t = popcount + carry_in, bit = t & 1, carry = t >> 1
//   approximated column bit = OR of the column, carry_in dropped, carry = 0
//
// Mask 0 is the exact multiplier. Approximation never overestimates the
// product, but it is not monotone under mask inclusion: OR-compressing a
// column whose carry would be discarded anyway can raise its output bit.

#ifndef AMLP_APPROX_MULT_HPP_
#define AMLP_APPROX_MULT_HPP_

#include <array>
#include <bitset>
#include <cstdint>
#include <vector>

#include "amlp/fixedpoint.hpp"

namespace amlp {

inline constexpr int kProductColumns = 14;
inline constexpr int kApproxColumns = 10;
inline constexpr int kConfigCount = 32;

// Partial products per column, c = 0..13.
inline constexpr std::array<int, kProductColumns> kColumnPopulation = {
    1, 2, 3, 4, 5, 6, 7, 6, 5, 4, 3, 2, 1, 0};

class MultConfig {
 public:
  constexpr MultConfig() noexcept = default;
  // Throws RangeError for mask > 31.
  explicit constexpr MultConfig(unsigned mask) : mask_(checked(mask)) {}

  static constexpr MultConfig exact() noexcept { return MultConfig(); }

  constexpr unsigned mask() const noexcept { return mask_; }
  constexpr bool is_exact() const noexcept { return mask_ == 0; }

  // Bit-set inclusion: every pair approximated by *this is approximated by
  // other.
  constexpr bool subset_of(MultConfig other) const noexcept {
    return (mask_ & other.mask_) == mask_;
  }

  friend constexpr bool operator==(MultConfig, MultConfig) = default;

 private:
  static constexpr std::uint8_t checked(unsigned mask) {
    if (mask >= kConfigCount) {
      throw RangeError("MultConfig: mask " + std::to_string(mask) +
                       " outside [0, 31]");
    }
    return static_cast<std::uint8_t>(mask);
  }

  std::uint8_t mask_ = 0;
};

// All 32 configurations in ascending mask order.
std::vector<MultConfig> all_configs();

using ColumnPlan = std::bitset<kProductColumns>;

ColumnPlan approx_columns(MultConfig cfg) noexcept;

// Column-level evaluation of the array. a, b <= 127 (RangeError otherwise).
std::uint16_t multiply_mag(std::uint32_t a, std::uint32_t b, MultConfig cfg);

// XOR sign logic around multiply_mag.
Product15 multiply_signed(SignMag8 a, SignMag8 b, MultConfig cfg) noexcept;

// Precomputed 32 x 128 x 128 copy of multiply_mag for the simulation hot
// path. Built once from the column evaluator.
class ProductTable {
 public:
  ProductTable();

  std::uint16_t magnitude(MultConfig cfg, std::uint32_t a,
                          std::uint32_t b) const noexcept {
    return table_[(static_cast<std::size_t>(cfg.mask()) << 14) | (a << 7) | b];
  }

  Product15 multiply(SignMag8 a, SignMag8 b, MultConfig cfg) const noexcept {
    return Product15::unchecked(a.negative() != b.negative(),
                                magnitude(cfg, a.magnitude(), b.magnitude()));
  }

  static const ProductTable& instance();

 private:
  std::vector<std::uint16_t> table_;
};

}  // namespace amlp

#endif  // AMLP_APPROX_MULT_HPP_
