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

#ifndef EVTCODEC_CORE_HALF_HPP
#define EVTCODEC_CORE_HALF_HPP

#include <cstdint>

namespace evtcodec {

/// IEEE 754 binary16 bits for a float32 value, round-to-nearest-even.
/// Values above the half range become infinity; NaN stays NaN.
uint16_t float_to_half(float value);

/// Exact widening of binary16 bits back to float32.
float half_to_float(uint16_t bits);

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_HALF_HPP
