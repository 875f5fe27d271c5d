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

#ifndef AMLP_TOPOLOGY_HPP_
#define AMLP_TOPOLOGY_HPP_

#include <cstddef>

namespace amlp {

// 62-30-10 network on a 14x14 pooled MNIST grid.
inline constexpr std::size_t kImageSide = 28;
inline constexpr std::size_t kImagePixels = kImageSide * kImageSide;
inline constexpr std::size_t kPooledSide = kImageSide / 2;
inline constexpr std::size_t kPooledPixels = kPooledSide * kPooledSide;

inline constexpr std::size_t kInputs = 62;
inline constexpr std::size_t kHidden = 30;
inline constexpr std::size_t kOutputs = 10;

// Physical neurons time-shared over the three hidden passes and the output
// pass.
inline constexpr std::size_t kPhysicalNeurons = 10;
inline constexpr std::size_t kHiddenPasses = kHidden / kPhysicalNeurons;

inline constexpr std::size_t kMultipliesPerImage =
    kInputs * kHidden + kHidden * kOutputs;

static_assert(kHidden % kPhysicalNeurons == 0);
static_assert(kOutputs == kPhysicalNeurons);
static_assert(kMultipliesPerImage == 2160);

}  // namespace amlp

#endif  // AMLP_TOPOLOGY_HPP_
