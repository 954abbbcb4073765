// Copyright 2026 The evtcodec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVTCODEC_CORE_RNG_HPP
#define EVTCODEC_CORE_RNG_HPP

#include <cstdint>
#include <random>

namespace evtcodec {

// std::uniform_*_distribution output is implementation-defined, which would
// break seed reproducibility across standard libraries. These helpers pin the
// exact draw sequence to the (standardized) mt19937_64 output.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, n).
inline uint64_t uniform_index(std::mt19937_64& rng, uint64_t n) {
  if (n <= 1) return 0;
  auto index = static_cast<uint64_t>(uniform01(rng) * static_cast<double>(n));
  return (index >= n) ? n - 1 : index;
}

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_RNG_HPP
