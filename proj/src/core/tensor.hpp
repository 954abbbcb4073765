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

#ifndef EVTCODEC_CORE_TENSOR_HPP
#define EVTCODEC_CORE_TENSOR_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "core/events.hpp"

namespace evtcodec {

enum class Format : uint8_t {
  Vtei = 0,   // B x H x W ternary, last-event polarity per uniform bin
  Shist = 1,  // 2B x H x W uint8 counts, negative channels first
  Mdes = 2,   // B x H x W ternary, trailing sub-windows halving in length
  Voxel = 3,  // 2B x H x W float32 bilinear kernel weights per polarity
};

enum class Dtype : uint8_t {
  TernaryI8 = 0,
  CountU8 = 1,
  F32 = 2,
};

const char* format_name(Format format);
Format format_from_name(std::string_view name);  // "vtei", "shist", "mdes", "voxel"
Dtype dtype_for(Format format);
size_t dtype_size(Dtype dtype);

/// Per-polarity channel count: SHist and Voxel split polarities into separate
/// channel groups (negative group first), doubling the channel axis.
uint32_t channels_for(Format format, uint32_t bins);

/// Dense C x H x W volume produced by one of the encoders. Channel-major,
/// row-major storage. Values after construction are all zero.
class DenseTensor {
 public:
  /// Zero-filled tensor with the canonical dims/dtype for `format`.
  DenseTensor(Format format, const TimeWindow& window, SensorGeometry geometry);

  /// Wraps existing data (deserialization path). Validates dims against the
  /// format, payload length, and the per-format value alphabet.
  DenseTensor(Format format, const TimeWindow& window, SensorGeometry geometry,
              std::array<uint32_t, 3> dims,
              std::variant<std::vector<int8_t>, std::vector<uint8_t>, std::vector<float>> data);

  Format format() const { return format_; }
  Dtype dtype() const { return dtype_; }
  const TimeWindow& window() const { return window_; }
  const SensorGeometry& geometry() const { return geometry_; }
  const std::array<uint32_t, 3>& dims() const { return dims_; }

  uint32_t channels() const { return dims_[0]; }
  uint32_t height() const { return dims_[1]; }
  uint32_t width() const { return dims_[2]; }
  size_t size() const { return size_; }
  size_t byte_size() const { return size_ * dtype_size(dtype_); }

  size_t index(uint32_t channel, uint32_t y, uint32_t x) const {
    return (static_cast<size_t>(channel) * dims_[1] + y) * dims_[2] + x;
  }

  std::span<int8_t> i8();
  std::span<const int8_t> i8() const;
  std::span<uint8_t> u8();
  std::span<const uint8_t> u8() const;
  std::span<float> f32();
  std::span<const float> f32() const;

  bool operator==(const DenseTensor&) const = default;

 private:
  void validate_contents() const;

  Format format_ = Format::Vtei;
  Dtype dtype_ = Dtype::TernaryI8;
  TimeWindow window_{};
  SensorGeometry geometry_{};
  std::array<uint32_t, 3> dims_{};
  size_t size_ = 0;
  std::variant<std::vector<int8_t>, std::vector<uint8_t>, std::vector<float>> data_;
};

/// Cells holding a value other than exact zero.
uint64_t count_nonzeros(const DenseTensor& tensor);

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_TENSOR_HPP
