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

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace amlp {
namespace {

TEST(MultConfig, RejectsMaskAbove31) {
  EXPECT_THROW(MultConfig(32), RangeError);
  EXPECT_NO_THROW(MultConfig(31));
}

TEST(MultConfig, SubsetRelation) {
  EXPECT_TRUE(MultConfig(12).subset_of(MultConfig(15)));
  EXPECT_FALSE(MultConfig(16).subset_of(MultConfig(15)));
  EXPECT_TRUE(MultConfig::exact().subset_of(MultConfig(1)));
  EXPECT_EQ(all_configs().size(), 32u);
}

TEST(ApproxColumns, PairsMapToColumns) {
  EXPECT_TRUE(approx_columns(MultConfig(0)).none());
  EXPECT_EQ(approx_columns(MultConfig(1)).to_ulong(), 0b11u);
  EXPECT_EQ(approx_columns(MultConfig(16)).to_ulong(), 0b1100000000u);
  EXPECT_EQ(approx_columns(MultConfig(31)).count(), 10u);
}

TEST(MultiplyMag, ExactModeIsExact) {
  for (std::uint32_t a = 0; a < 128; ++a)
    for (std::uint32_t b = 0; b < 128; ++b) ASSERT_EQ(multiply_mag(a, b, MultConfig(0)), a * b);
}

TEST(MultiplyMag, RejectsWideOperands) {
  EXPECT_THROW(multiply_mag(128, 1, MultConfig(0)), RangeError);
  EXPECT_THROW(multiply_mag(1, 200, MultConfig(3)), RangeError);
}

TEST(MultiplyMag, KnownValues) {
  EXPECT_EQ(multiply_mag(3, 3, MultConfig(1)), 7);
  EXPECT_EQ(multiply_mag(3, 3, MultConfig(2)), 5);
  EXPECT_EQ(multiply_mag(3, 3, MultConfig(3)), 7);
  EXPECT_EQ(multiply_mag(127, 127, MultConfig(31)), 12287);
  EXPECT_EQ(multiply_mag(0, 127, MultConfig(31)), 0);
  EXPECT_EQ(multiply_mag(1, 1, MultConfig(31)), 1);
}

TEST(MultiplyMag, MatchesPartialProductOracle) {
  for (MultConfig cfg : all_configs())
    for (std::uint32_t a = 0; a < 128; ++a)
      for (std::uint32_t b = 0; b < 128; ++b)
        ASSERT_EQ(multiply_mag(a, b, cfg),
                  testing::reference_multiply(static_cast<int>(a), static_cast<int>(b),
                                              cfg.mask()))
            << a << "*" << b << " cfg " << cfg.mask();
}

TEST(MultiplyMag, NeverOverestimates) {
  for (MultConfig cfg : all_configs())
    for (std::uint32_t a = 0; a < 128; ++a)
      for (std::uint32_t b = 0; b < 128; ++b) ASSERT_LE(multiply_mag(a, b, cfg), a * b);
}

TEST(MultiplyMag, IsCommutative) {
  for (MultConfig cfg : all_configs())
    for (std::uint32_t a = 0; a < 128; ++a)
      for (std::uint32_t b = 0; b < a; ++b)
        ASSERT_EQ(multiply_mag(a, b, cfg), multiply_mag(b, a, cfg));
}

// Adding a pair above every pair already approximated can only lower the
// result: the columns below are untouched and the carry into the new pair
// is discarded.
TEST(MultiplyMag, MonotoneWhenAddingHigherPairs) {
  for (unsigned m1 = 0; m1 < 32; ++m1) {
    for (unsigned top = 0; top < 5; ++top) {
      if ((m1 >> top) != 0) continue;
      const MultConfig c1(m1);
      const MultConfig c2(m1 | (1u << top));
      for (std::uint32_t a = 0; a < 128; ++a)
        for (std::uint32_t b = 0; b < 128; ++b)
          ASSERT_LE(multiply_mag(a, b, c2), multiply_mag(a, b, c1))
              << a << "*" << b << " masks " << m1 << " -> " << c2.mask();
    }
  }
}

// Approximating a lower pair removes the carry that an exact higher pair
// would have absorbed, so the general subset ordering does not hold.
TEST(MultiplyMag, InclusionOrderingHasCounterexamples) {
  EXPECT_LT(multiply_mag(3, 3, MultConfig(2)), multiply_mag(3, 3, MultConfig(3)));
  for (auto [a, b] : {std::pair{3u, 6u}, {3u, 7u}, {3u, 11u}}) {
    EXPECT_LT(multiply_mag(a, b, MultConfig(12)), multiply_mag(a, b, MultConfig(15)))
        << a << "*" << b;
  }
  int violating_pairs = 0;
  for (unsigned m1 = 0; m1 < 32; ++m1) {
    for (unsigned m2 = 0; m2 < 32; ++m2) {
      if (m1 == m2 || (m1 & m2) != m1) continue;
      bool bad = false;
      for (std::uint32_t a = 0; a < 128 && !bad; ++a)
        for (std::uint32_t b = 0; b < 128 && !bad; ++b)
          bad = multiply_mag(a, b, MultConfig(m2)) > multiply_mag(a, b, MultConfig(m1));
      violating_pairs += bad;
    }
  }
  EXPECT_EQ(violating_pairs, 131);
}

TEST(MultiplySigned, SignIsXor) {
  const MultConfig cfg(5);
  for (int a : {-100, -3, 0, 3, 100}) {
    for (int b : {-77, -1, 0, 1, 77}) {
      const Product15 p = multiply_signed(encode(a), encode(b), cfg);
      EXPECT_EQ(p.value(), testing::reference_signed_product(a, b, cfg.mask()));
      if (p.magnitude() == 0) {
        EXPECT_FALSE(p.negative());
      }
    }
  }
}

TEST(ProductTable, AgreesWithColumnEvaluation) {
  const ProductTable& t = ProductTable::instance();
  for (MultConfig cfg : all_configs())
    for (std::uint32_t a = 0; a < 128; ++a)
      for (std::uint32_t b = 0; b < 128; ++b)
        ASSERT_EQ(t.magnitude(cfg, a, b), multiply_mag(a, b, cfg));
  EXPECT_EQ(&t, &ProductTable::instance());
}

TEST(ProductTable, SignedLookupMatchesMultiplySigned) {
  const ProductTable& t = ProductTable::instance();
  for (int a = -127; a <= 127; a += 7)
    for (int b = -127; b <= 127; b += 5)
      for (MultConfig cfg : {MultConfig(0), MultConfig(9), MultConfig(31)})
        ASSERT_EQ(t.multiply(encode(a), encode(b), cfg),
                  multiply_signed(encode(a), encode(b), cfg));
}

}  // namespace
}  // namespace amlp
