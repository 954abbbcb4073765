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

#include "core/tensor.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace evtcodec {

const char* format_name(Format format) {
  switch (format) {
    case Format::Vtei: return "vtei";
    case Format::Shist: return "shist";
    case Format::Mdes: return "mdes";
    case Format::Voxel: return "voxel";
  }
  raise(Errc::invalid_argument, "unknown format tag");
}

Format format_from_name(std::string_view name) {
  if (name == "vtei") return Format::Vtei;
  if (name == "shist") return Format::Shist;
  if (name == "mdes") return Format::Mdes;
  if (name == "voxel") return Format::Voxel;
  raise(Errc::invalid_argument, "unknown format name: " + std::string(name));
}

Dtype dtype_for(Format format) {
  switch (format) {
    case Format::Vtei:
    case Format::Mdes: return Dtype::TernaryI8;
    case Format::Shist: return Dtype::CountU8;
    case Format::Voxel: return Dtype::F32;
  }
  raise(Errc::invalid_argument, "unknown format tag");
}

size_t dtype_size(Dtype dtype) {
  switch (dtype) {
    case Dtype::TernaryI8:
    case Dtype::CountU8: return 1;
    case Dtype::F32: return 4;
  }
  raise(Errc::invalid_argument, "unknown dtype");
}

uint32_t channels_for(Format format, uint32_t bins) {
  return (format == Format::Shist || format == Format::Voxel) ? 2 * bins : bins;
}

namespace {

void check_shape(Format format, const TimeWindow& window, SensorGeometry geometry) {
  if (geometry.width < 1 || geometry.height < 1) {
    raise(Errc::invalid_argument, "sensor geometry must be at least 1x1");
  }
  if (window.t_end <= window.t_start || window.bins < 1) {
    raise(Errc::invalid_argument, "time window must have t_end > t_start and bins >= 1");
  }
  (void)format;
}

}  // namespace

DenseTensor::DenseTensor(Format format, const TimeWindow& window, SensorGeometry geometry)
    : format_(format), dtype_(dtype_for(format)), window_(window), geometry_(geometry) {
  check_shape(format, window, geometry);
  dims_ = {channels_for(format, window.bins), geometry.height, geometry.width};
  size_ = static_cast<size_t>(dims_[0]) * dims_[1] * dims_[2];
  switch (dtype_) {
    case Dtype::TernaryI8: data_ = std::vector<int8_t>(size_, 0); break;
    case Dtype::CountU8: data_ = std::vector<uint8_t>(size_, 0); break;
    case Dtype::F32: data_ = std::vector<float>(size_, 0.0f); break;
  }
}

DenseTensor::DenseTensor(
    Format format, const TimeWindow& window, SensorGeometry geometry,
    std::array<uint32_t, 3> dims,
    std::variant<std::vector<int8_t>, std::vector<uint8_t>, std::vector<float>> data)
    : format_(format),
      dtype_(dtype_for(format)),
      window_(window),
      geometry_(geometry),
      dims_(dims),
      data_(std::move(data)) {
  check_shape(format, window, geometry);
  if (dims_[0] != channels_for(format, window.bins) || dims_[1] != geometry.height ||
      dims_[2] != geometry.width) {
    raise(Errc::invalid_argument, "tensor dims inconsistent with format/window/geometry");
  }
  size_ = static_cast<size_t>(dims_[0]) * dims_[1] * dims_[2];
  const size_t got = std::visit([](const auto& v) { return v.size(); }, data_);
  if (got != size_) {
    raise(Errc::invalid_argument, "tensor payload length does not match dims");
  }
  if (data_.index() != static_cast<size_t>(dtype_)) {
    raise(Errc::invalid_argument, "tensor payload type does not match format dtype");
  }
  validate_contents();
}

void DenseTensor::validate_contents() const {
  if (dtype_ == Dtype::TernaryI8) {
    for (int8_t v : std::get<std::vector<int8_t>>(data_)) {
      if (v < -1 || v > 1) {
        raise(Errc::invalid_argument, "ternary tensor value outside {-1, 0, +1}");
      }
    }
  } else if (dtype_ == Dtype::F32) {
    for (float v : std::get<std::vector<float>>(data_)) {
      if (!std::isfinite(v) || v < 0.0f) {
        raise(Errc::invalid_argument, "voxel tensor values must be finite and non-negative");
      }
    }
  }
}

std::span<int8_t> DenseTensor::i8() {
  if (dtype_ != Dtype::TernaryI8) raise(Errc::invalid_argument, "tensor dtype is not ternary-int8");
  return std::get<std::vector<int8_t>>(data_);
}
std::span<const int8_t> DenseTensor::i8() const {
  if (dtype_ != Dtype::TernaryI8) raise(Errc::invalid_argument, "tensor dtype is not ternary-int8");
  return std::get<std::vector<int8_t>>(data_);
}
std::span<uint8_t> DenseTensor::u8() {
  if (dtype_ != Dtype::CountU8) raise(Errc::invalid_argument, "tensor dtype is not count-uint8");
  return std::get<std::vector<uint8_t>>(data_);
}
std::span<const uint8_t> DenseTensor::u8() const {
  if (dtype_ != Dtype::CountU8) raise(Errc::invalid_argument, "tensor dtype is not count-uint8");
  return std::get<std::vector<uint8_t>>(data_);
}
std::span<float> DenseTensor::f32() {
  if (dtype_ != Dtype::F32) raise(Errc::invalid_argument, "tensor dtype is not float32");
  return std::get<std::vector<float>>(data_);
}
std::span<const float> DenseTensor::f32() const {
  if (dtype_ != Dtype::F32) raise(Errc::invalid_argument, "tensor dtype is not float32");
  return std::get<std::vector<float>>(data_);
}

uint64_t count_nonzeros(const DenseTensor& tensor) {
  uint64_t count = 0;
  switch (tensor.dtype()) {
    case Dtype::TernaryI8:
      for (int8_t v : tensor.i8()) count += (v != 0);
      break;
    case Dtype::CountU8:
      for (uint8_t v : tensor.u8()) count += (v != 0);
      break;
    case Dtype::F32:
      for (float v : tensor.f32()) count += (v != 0.0f);
      break;
  }
  return count;
}

}  // namespace evtcodec
