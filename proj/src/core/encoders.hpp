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

#ifndef EVTCODEC_CORE_ENCODERS_HPP
#define EVTCODEC_CORE_ENCODERS_HPP

#include "core/tensor.hpp"

namespace evtcodec {

// All encoders are pure: identical chunk + window give bit-identical tensors.
// Every event must lie inside the window (Errc::out_of_window otherwise) and
// inside the chunk geometry (Errc::bounds).

/// Ternary B x H x W volume holding the polarity of the last event per
/// uniform temporal bin and pixel; background stays 0. Timestamp ties are
/// broken by stream order (later event wins).
DenseTensor encode_vtei(const EventStream& chunk, const TimeWindow& window);

/// 2B x H x W per-polarity event counts, negative channels [0, B) first.
/// Counts saturate at 255.
DenseTensor encode_shist(const EventStream& chunk, const TimeWindow& window);

/// Ternary B x H x W last-event volume over trailing sub-windows: bin i
/// covers [t_end - T/2^i, t_end], so bin 0 spans the whole window and each
/// following bin halves it.
DenseTensor encode_mdes(const EventStream& chunk, const TimeWindow& window);

/// 2B x H x W float32 voxel grid, negative channels first. Each event's
/// normalized time t* = (t - t_start) / T * (B - 1) contributes
/// max(0, 1 - |i - t*|) to bin i of its polarity group; accumulation is in
/// 32-bit float. Requires bins >= 2.
DenseTensor encode_voxel(const EventStream& chunk, const TimeWindow& window);

DenseTensor encode(const EventStream& chunk, const TimeWindow& window, Format format);

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_ENCODERS_HPP
