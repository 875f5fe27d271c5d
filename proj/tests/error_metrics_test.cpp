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

#include "amlp/error_metrics.hpp"

#include <gtest/gtest.h>

#include <array>

#include "support/oracles.hpp"

namespace amlp {
namespace {

// Frozen from an independent exhaustive enumeration.
constexpr std::array<std::uint32_t, 32> kErrorPairs = {
    0,     1024,  5184,  5184,  9780,  9800,  9812,  9812,  12252, 12289, 12398,
    12398, 12424, 12435, 12444, 12444, 11815, 11911, 12282, 12282, 12743, 12754,
    12763, 12763, 12790, 12827, 12934, 12934, 12960, 12971, 12980, 12980};
constexpr std::array<std::uint64_t, 32> kTotalEd = {
    0,       2048,    56832,   54784,   577408,  575360,  540032,  537984,
    3171520, 3169472, 3134144, 3132096, 2925632, 2923584, 2888256, 2886208,
    8961024, 8960256, 8927744, 8925696, 8702848, 8700800, 8665472, 8663424,
    7869632, 7867584, 7832256, 7830208, 7623744, 7621696, 7586368, 7584320};
constexpr std::array<std::uint32_t, 32> kMaxEd = {
    0,    2,    36,   34,   272,  258,  260,  258,  1344, 1282, 1316,
    1314, 1296, 1282, 1284, 1282, 4096, 3842, 3876, 3874, 3856, 3842,
    3844, 3842, 3904, 3842, 3876, 3874, 3856, 3842, 3844, 3842};

TEST(EvaluateConfig, ExactModeHasNoError) {
  const ErrorReport r = evaluate_config(MultConfig(0));
  EXPECT_EQ(r.er, 0.0);
  EXPECT_EQ(r.mred, 0.0);
  EXPECT_EQ(r.nmed, 0.0);
  EXPECT_EQ(r.max_ed, 0u);
  EXPECT_EQ(r.total_ed, 0u);
}

TEST(EvaluateConfig, MatchesFrozenEnumeration) {
  for (MultConfig cfg : all_configs()) {
    const ErrorReport r = evaluate_config(cfg);
    const unsigned m = cfg.mask();
    EXPECT_EQ(r.config, cfg);
    EXPECT_EQ(r.error_pairs, kErrorPairs[m]) << m;
    EXPECT_EQ(r.total_ed, kTotalEd[m]) << m;
    EXPECT_EQ(r.max_ed, kMaxEd[m]) << m;
    EXPECT_DOUBLE_EQ(r.er, kErrorPairs[m] / 16384.0);
    EXPECT_DOUBLE_EQ(r.mean_ed, static_cast<double>(kTotalEd[m]) / 16384.0);
    EXPECT_DOUBLE_EQ(r.nmed, static_cast<double>(kTotalEd[m]) / 16384.0 / 16129.0);
  }
}

TEST(EvaluateConfig, Mask31MaxDistance) {
  EXPECT_EQ(evaluate_config(MultConfig(31)).max_ed, 3842u);
}

TEST(EvaluateConfig, LowestPairOnly) {
  // Pair 0 only errs when both low bits are set: 3 -> 1 in column 1.
  const ErrorReport r = evaluate_config(MultConfig(1));
  EXPECT_EQ(r.error_pairs, 1024u);
  EXPECT_EQ(r.max_ed, 2u);
}

TEST(EvaluateConfig, ErrorRateMonotoneUnderInclusion) {
  std::array<double, 32> er{};
  for (MultConfig cfg : all_configs()) er[cfg.mask()] = evaluate_config(cfg).er;
  for (unsigned m1 = 0; m1 < 32; ++m1)
    for (unsigned m2 = 0; m2 < 32; ++m2)
      if ((m1 & m2) == m1) {
        EXPECT_LE(er[m1], er[m2]) << m1 << " vs " << m2;
      }
}

TEST(EvaluateConfig, MetricsPositiveForApproximateMasks) {
  for (unsigned m = 1; m < 32; ++m) {
    const ErrorReport r = evaluate_config(MultConfig(m));
    EXPECT_GT(r.er, 0.0);
    EXPECT_GT(r.mred, 0.0);
    EXPECT_GT(r.nmed, 0.0);
  }
}

TEST(EvaluateConfig, RelativeErrorSkipsZeroProducts) {
  for (unsigned m : {5u, 31u}) {
    double sum = 0.0;
    int nonzero = 0;
    for (int a = 1; a < 128; ++a) {
      for (int b = 1; b < 128; ++b) {
        const double exact = a * b;
        sum += (exact - static_cast<double>(testing::reference_multiply(a, b, m))) / exact;
        ++nonzero;
      }
    }
    EXPECT_NEAR(evaluate_config(MultConfig(m)).mred, sum / nonzero, 1e-12) << m;
  }
}

TEST(Summarize, ExcludesExactConfig) {
  const MetricsTable t = summarize_all();
  ASSERT_EQ(t.reports.size(), 32u);
  EXPECT_EQ(t.summary.config_count, 31);
  EXPECT_DOUBLE_EQ(t.summary.er.min, 0.0625);
  EXPECT_NEAR(t.summary.er.max, 0.792236328125, 1e-12);
  EXPECT_NEAR(t.summary.er.average, 0.6937708700856855, 1e-12);
  EXPECT_NEAR(t.summary.mred.max, 0.15582352355093686, 1e-12);
  EXPECT_NEAR(t.summary.mred.average, 0.09041547668252345, 1e-12);
  EXPECT_NEAR(t.summary.nmed.average, 0.019396820043640084, 1e-12);
  EXPECT_GT(t.summary.mred.min, 0.0);
}

TEST(Summarize, EmptyInput) {
  const MetricsSummary s = summarize({});
  EXPECT_EQ(s.config_count, 0);
}

}  // namespace
}  // namespace amlp
