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

#ifndef EVTCODEC_CORE_COO_HPP
#define EVTCODEC_CORE_COO_HPP

#include <cstdint>
#include <vector>

#include "core/tensor.hpp"

namespace evtcodec {

/// Per-record bit budget of the coordinate-list codec. Coordinate fields use
/// ceil(log2(extent)) bits; the data payload is 1 bit for ternary formats
/// (0 = -1, 1 = +1), 8 bits for SHist counts, and 16 bits (binary16) for
/// Voxel values. SHist/Voxel carry one extra channel bit for the polarity
/// group.
struct CooLayout {
  uint32_t x_bits = 0;
  uint32_t y_bits = 0;
  uint32_t bin_bits = 0;
  uint32_t channel_bits = 0;
  uint32_t data_bits = 0;
  uint32_t record_bytes = 0;

  uint32_t total_bits() const { return x_bits + y_bits + bin_bits + channel_bits + data_bits; }
  bool operator==(const CooLayout&) const = default;
};

CooLayout layout_for(Format format, SensorGeometry geometry, uint32_t bins);

/// Packed coordinate-list form of a tensor: one record per non-zero cell,
/// sorted by (channel, bin, y, x). Record fields are packed LSB-first in the
/// order x, y, bin, channel, data, then padded to record_bytes and stored
/// little-endian.
class CooBuffer {
 public:
  CooBuffer(Format format, SensorGeometry geometry, TimeWindow window, uint64_t record_count,
            std::vector<uint8_t> bytes);

  Format format() const { return format_; }
  const SensorGeometry& geometry() const { return geometry_; }
  const TimeWindow& window() const { return window_; }
  const CooLayout& layout() const { return layout_; }
  uint64_t record_count() const { return record_count_; }
  const std::vector<uint8_t>& bytes() const { return bytes_; }

  bool operator==(const CooBuffer&) const = default;

 private:
  Format format_ = Format::Vtei;
  SensorGeometry geometry_{};
  TimeWindow window_{};
  CooLayout layout_{};
  uint64_t record_count_ = 0;
  std::vector<uint8_t> bytes_;
};

/// One record per non-zero cell. Throws Errc::codec if a ternary tensor
/// holds a value outside {-1, 0, +1}.
CooBuffer coo_encode(const DenseTensor& tensor);

/// Lossless inverse for ternary and count tensors; Voxel values come back as
/// their binary16-rounded originals. Rejects records with out-of-range
/// coordinates, non-zero padding, or non-ascending order (Errc::corrupt).
DenseTensor coo_decode(const CooBuffer& buffer);

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_COO_HPP
