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

#ifndef EVTCODEC_CORE_AUGMENT_HPP
#define EVTCODEC_CORE_AUGMENT_HPP

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "core/tensor.hpp"

namespace evtcodec {

enum class RpsBranch : uint8_t {
  Identity = 0,
  KeepPositiveOnly = 1,  // negative-polarity content zeroed
  KeepNegativeOnly = 2,  // positive-polarity content zeroed
};

/// Random polarity suppression parameters: with probability `s` one polarity
/// is suppressed, and `p` is the probability that the suppressed polarity is
/// the positive one.
struct RpsConfig {
  double s = 0.05;
  double p = 0.5;
};

/// Draws r1, r2 in [0, 1): identity when r1 >= s, otherwise keep-positive
/// when r2 >= p, otherwise keep-negative.
RpsBranch rps_draw(const RpsConfig& config, std::mt19937_64& rng);
RpsBranch rps_draw(const RpsConfig& config, uint64_t seed);

/// Zeroes one polarity across all bins: sign-valued formats drop the cells of
/// that sign, channel-grouped formats drop the whole polarity group.
DenseTensor rps_apply(const DenseTensor& tensor, RpsBranch branch);

/// Mirrors columns: x -> width - 1 - x in every channel.
DenseTensor hflip(const DenseTensor& tensor);

/// Shrinks content to (H/scale, W/scale) by nearest-neighbor and places it at
/// (row_offset, col_offset) on a zero canvas of the original size.
/// scale must lie in [1.0, 1.2] and the placement must fit the canvas.
DenseTensor zoom_out(const DenseTensor& tensor, double scale, uint32_t row_offset,
                     uint32_t col_offset);

struct AugConfig {
  RpsConfig rps;
  double hflip_prob = 0.0;
  double zoom_prob = 0.0;
};

/// Parameters drawn once per training sequence and applied unchanged to every
/// tensor of that sequence.
struct AugSequenceDraw {
  uint64_t seed = 0;
  RpsBranch rps = RpsBranch::Identity;
  bool hflip = false;
  std::optional<double> zoom_scale;  // in [1.0, 1.2] when present
  uint32_t zoom_row = 0;
  uint32_t zoom_col = 0;
};

/// Same seed always yields the same draw.
AugSequenceDraw draw_sequence(const AugConfig& config, SensorGeometry geometry, uint64_t seed);

/// One tensor through the drawn pipeline: rps, then flip, then zoom.
DenseTensor apply_draw(const DenseTensor& tensor, const AugSequenceDraw& draw);

/// Applies the identical draw to every tensor of a sequence. All tensors must
/// share format and dims (Errc::invalid_argument otherwise).
std::vector<DenseTensor> apply_sequence(std::span<const DenseTensor> tensors,
                                        const AugSequenceDraw& draw);

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_AUGMENT_HPP
