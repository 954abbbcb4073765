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

#include "core/half.hpp"

#include <bit>
#include <cmath>

namespace evtcodec {

uint16_t float_to_half(float value) {
  const uint32_t bits = std::bit_cast<uint32_t>(value);
  const auto sign = static_cast<uint16_t>((bits >> 16) & 0x8000u);
  const uint32_t abs = bits & 0x7FFFFFFFu;

  if (abs >= 0x7F800000u) {  // inf / nan
    const uint16_t payload = (abs > 0x7F800000u) ? 0x0200u : 0u;
    return static_cast<uint16_t>(sign | 0x7C00u | payload);
  }
  if (abs < 0x38800000u) {
    // Below 2^-14: half subnormal or zero. Scaling by 2^24 is exact, so the
    // current (nearest-even) rounding of lrintf does the mantissa rounding.
    const float scaled = std::bit_cast<float>(abs) * 16777216.0f;
    const auto quantized = static_cast<uint16_t>(std::lrintf(scaled));
    return static_cast<uint16_t>(sign | quantized);
  }
  // Normal range: round the 13 dropped mantissa bits to nearest even; the
  // carry propagates into the exponent and, at the top, into infinity.
  const uint32_t rounded = abs + 0x00000FFFu + ((abs >> 13) & 1u);
  if (rounded >= 0x47800000u) {  // past the largest finite half
    return static_cast<uint16_t>(sign | 0x7C00u);
  }
  return static_cast<uint16_t>(sign | ((rounded - 0x38000000u) >> 13));
}

float half_to_float(uint16_t bits) {
  const uint32_t sign = static_cast<uint32_t>(bits & 0x8000u) << 16;
  const uint32_t exponent = (bits >> 10) & 0x1Fu;
  const uint32_t mantissa = bits & 0x03FFu;

  if (exponent == 0) {
    // Subnormal: mantissa * 2^-24, exact in float32.
    const float magnitude = static_cast<float>(mantissa) * 5.9604644775390625e-08f;
    return (bits & 0x8000u) ? -magnitude : magnitude;
  }
  uint32_t out;
  if (exponent == 31) {
    out = 0x7F800000u | (mantissa << 13);
  } else {
    out = ((exponent + 112u) << 23) | (mantissa << 13);
  }
  return std::bit_cast<float>(sign | out);
}

}  // namespace evtcodec
