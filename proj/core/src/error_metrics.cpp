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

#include <algorithm>
#include <limits>

namespace amlp {

ErrorReport evaluate_config(MultConfig cfg) {
  ErrorReport r;
  r.config = cfg;
  double relative_sum = 0.0;
  std::uint32_t nonzero_pairs = 0;
  for (std::uint32_t a = 0; a <= kMaxOperand; ++a) {
    for (std::uint32_t b = 0; b <= kMaxOperand; ++b) {
      const std::uint32_t exact = a * b;
      const std::uint32_t approx = multiply_mag(a, b, cfg);
      const std::uint32_t ed = exact > approx ? exact - approx : approx - exact;
      if (ed != 0) ++r.error_pairs;
      r.total_ed += ed;
      r.max_ed = std::max(r.max_ed, ed);
      if (exact != 0) {
        ++nonzero_pairs;
        relative_sum += static_cast<double>(ed) / exact;
      }
    }
  }
  r.er = static_cast<double>(r.error_pairs) / kOperandPairs;
  r.mred = relative_sum / nonzero_pairs;
  r.mean_ed = static_cast<double>(r.total_ed) / kOperandPairs;
  r.nmed = r.mean_ed / kMaxProduct;
  return r;
}

MetricsSummary summarize(const std::vector<ErrorReport>& reports) {
  MetricsSummary s;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  s.er = {kInf, -kInf, 0.0};
  s.mred = s.er;
  s.nmed = s.er;
  auto fold = [](MetricStats& st, double v) {
    st.min = std::min(st.min, v);
    st.max = std::max(st.max, v);
    st.average += v;
  };
  for (const ErrorReport& r : reports) {
    if (r.config.is_exact()) continue;
    fold(s.er, r.er);
    fold(s.mred, r.mred);
    fold(s.nmed, r.nmed);
    ++s.config_count;
  }
  if (s.config_count == 0) return MetricsSummary{};
  for (MetricStats* st : {&s.er, &s.mred, &s.nmed}) st->average /= s.config_count;
  return s;
}

MetricsTable summarize_all() {
  MetricsTable t;
  t.reports.reserve(kConfigCount);
  for (MultConfig cfg : all_configs()) t.reports.push_back(evaluate_config(cfg));
  t.summary = summarize(t.reports);
  return t;
}

}  // namespace amlp
