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

#include "core/coo.hpp"

#include <bit>
#include <string>
#include <utility>

#include "core/half.hpp"

namespace evtcodec {

namespace {

uint32_t ceil_log2(uint32_t n) {
  return (n <= 1) ? 0 : static_cast<uint32_t>(std::bit_width(n - 1));
}

uint64_t field_mask(uint32_t bits) {
  return (bits >= 64) ? ~0ull : ((1ull << bits) - 1);
}

}  // namespace

CooLayout layout_for(Format format, SensorGeometry geometry, uint32_t bins) {
  if (geometry.width < 1 || geometry.height < 1 || bins < 1) {
    raise(Errc::invalid_argument, "layout requires width, height and bins >= 1");
  }
  CooLayout layout;
  layout.x_bits = ceil_log2(geometry.width);
  layout.y_bits = ceil_log2(geometry.height);
  layout.bin_bits = ceil_log2(bins);
  layout.channel_bits = (format == Format::Shist || format == Format::Voxel) ? 1 : 0;
  switch (format) {
    case Format::Vtei:
    case Format::Mdes: layout.data_bits = 1; break;
    case Format::Shist: layout.data_bits = 8; break;
    case Format::Voxel: layout.data_bits = 16; break;
  }
  if (layout.total_bits() > 64) {
    raise(Errc::unsupported, "COO record exceeds 64 bits for this geometry");
  }
  layout.record_bytes = (layout.total_bits() + 7) / 8;
  return layout;
}

CooBuffer::CooBuffer(Format format, SensorGeometry geometry, TimeWindow window,
                     uint64_t record_count, std::vector<uint8_t> bytes)
    : format_(format),
      geometry_(geometry),
      window_(window),
      layout_(layout_for(format, geometry, window.bins)),
      record_count_(record_count),
      bytes_(std::move(bytes)) {
  if (bytes_.size() != record_count_ * layout_.record_bytes) {
    raise(Errc::corrupt, "COO payload length does not match record count");
  }
}

CooBuffer coo_encode(const DenseTensor& tensor) {
  const uint32_t bins = tensor.window().bins;
  const CooLayout layout = layout_for(tensor.format(), tensor.geometry(), bins);
  const uint32_t y_shift = layout.x_bits;
  const uint32_t bin_shift = y_shift + layout.y_bits;
  const uint32_t channel_shift = bin_shift + layout.bin_bits;
  const uint32_t data_shift = channel_shift + layout.channel_bits;

  std::vector<uint8_t> bytes;
  uint64_t records = 0;

  // Row-major traversal of (channel-group * bins + bin, y, x) is exactly the
  // (channel, bin, y, x) sort order the format requires.
  const auto emit = [&](uint32_t c, uint32_t y, uint32_t x, uint64_t payload) {
    const uint64_t channel = (layout.channel_bits > 0) ? c / bins : 0;
    const uint64_t bin = (layout.channel_bits > 0) ? c % bins : c;
    uint64_t record = static_cast<uint64_t>(x);
    record |= static_cast<uint64_t>(y) << y_shift;
    record |= bin << bin_shift;
    record |= channel << channel_shift;
    record |= payload << data_shift;
    for (uint32_t byte = 0; byte < layout.record_bytes; ++byte) {
      bytes.push_back(static_cast<uint8_t>(record >> (8 * byte)));
    }
    ++records;
  };

  const auto& dims = tensor.dims();
  size_t flat = 0;
  for (uint32_t c = 0; c < dims[0]; ++c) {
    for (uint32_t y = 0; y < dims[1]; ++y) {
      for (uint32_t x = 0; x < dims[2]; ++x, ++flat) {
        switch (tensor.dtype()) {
          case Dtype::TernaryI8: {
            const int8_t v = tensor.i8()[flat];
            if (v == 0) break;
            if (v != 1 && v != -1) {
              raise(Errc::codec, "non-ternary value in a ternary tensor");
            }
            emit(c, y, x, v == 1 ? 1 : 0);
            break;
          }
          case Dtype::CountU8: {
            const uint8_t v = tensor.u8()[flat];
            if (v != 0) emit(c, y, x, v);
            break;
          }
          case Dtype::F32: {
            const float v = tensor.f32()[flat];
            if (v != 0.0f) emit(c, y, x, float_to_half(v));
            break;
          }
        }
      }
    }
  }
  return CooBuffer(tensor.format(), tensor.geometry(), tensor.window(), records,
                   std::move(bytes));
}

DenseTensor coo_decode(const CooBuffer& buffer) {
  const CooLayout& layout = buffer.layout();
  const uint32_t bins = buffer.window().bins;
  const uint32_t y_shift = layout.x_bits;
  const uint32_t bin_shift = y_shift + layout.y_bits;
  const uint32_t channel_shift = bin_shift + layout.bin_bits;
  const uint32_t data_shift = channel_shift + layout.channel_bits;

  DenseTensor tensor(buffer.format(), buffer.window(), buffer.geometry());
  const auto& bytes = buffer.bytes();

  int64_t previous_key = -1;
  for (uint64_t r = 0; r < buffer.record_count(); ++r) {
    uint64_t record = 0;
    for (uint32_t byte = 0; byte < layout.record_bytes; ++byte) {
      record |= static_cast<uint64_t>(bytes[r * layout.record_bytes + byte]) << (8 * byte);
    }
    if (layout.total_bits() < 64 && (record >> layout.total_bits()) != 0) {
      raise(Errc::corrupt, "record " + std::to_string(r) + ": non-zero padding bits");
    }
    const auto x = static_cast<uint32_t>(record & field_mask(layout.x_bits));
    const auto y = static_cast<uint32_t>((record >> y_shift) & field_mask(layout.y_bits));
    const auto bin = static_cast<uint32_t>((record >> bin_shift) & field_mask(layout.bin_bits));
    const auto channel =
        static_cast<uint32_t>((record >> channel_shift) & field_mask(layout.channel_bits));
    const uint64_t payload = (record >> data_shift) & field_mask(layout.data_bits);

    if (x >= buffer.geometry().width || y >= buffer.geometry().height || bin >= bins) {
      raise(Errc::corrupt, "record " + std::to_string(r) + ": coordinates outside dims");
    }
    const uint32_t c = channel * bins + bin;
    const auto key = static_cast<int64_t>(tensor.index(c, y, x));
    if (key <= previous_key) {
      raise(Errc::corrupt,
            "record " + std::to_string(r) + ": records must be strictly ascending");
    }
    previous_key = key;

    switch (tensor.dtype()) {
      case Dtype::TernaryI8:
        tensor.i8()[key] = payload ? 1 : -1;
        break;
      case Dtype::CountU8:
        if (payload == 0) {
          raise(Errc::corrupt, "record " + std::to_string(r) + ": zero count payload");
        }
        tensor.u8()[key] = static_cast<uint8_t>(payload);
        break;
      case Dtype::F32: {
        // A payload of half-zero is legal: it is the faithful rounding of a
        // tiny non-zero float32 cell. Negative and non-finite payloads can
        // never come out of the encoder.
        const auto half = static_cast<uint16_t>(payload);
        if ((half & 0x8000u) != 0 || (half & 0x7C00u) == 0x7C00u) {
          raise(Errc::corrupt,
                "record " + std::to_string(r) + ": voxel payload must be finite, non-negative");
        }
        tensor.f32()[key] = half_to_float(half);
        break;
      }
    }
  }
  return tensor;
}

}  // namespace evtcodec
