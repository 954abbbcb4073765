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

#include "core/augment.hpp"

#include <algorithm>
#include <cmath>

#include "core/rng.hpp"

namespace evtcodec {

namespace {

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    raise(Errc::invalid_argument, std::string(name) + " must lie in [0, 1]");
  }
}

bool sign_valued(Format format) {
  return format == Format::Vtei || format == Format::Mdes;
}

template <typename T>
void zero_where_sign(std::span<T> data, T dropped) {
  for (T& v : data) {
    if (v == dropped) v = 0;
  }
}

template <typename T>
void zero_channel_group(DenseTensor& tensor, std::span<T> data, bool positive_group) {
  const uint32_t bins = tensor.window().bins;
  const uint32_t first = positive_group ? bins : 0;
  const size_t begin = tensor.index(first, 0, 0);
  const size_t plane = static_cast<size_t>(bins) * tensor.height() * tensor.width();
  std::fill(data.begin() + begin, data.begin() + begin + plane, T{});
}

template <typename T>
void flip_columns(const DenseTensor& in, std::span<const T> src, DenseTensor& out,
                  std::span<T> dst) {
  const uint32_t width = in.width();
  for (uint32_t c = 0; c < in.channels(); ++c) {
    for (uint32_t y = 0; y < in.height(); ++y) {
      for (uint32_t x = 0; x < width; ++x) {
        dst[out.index(c, y, x)] = src[in.index(c, y, width - 1 - x)];
      }
    }
  }
}

template <typename T>
void zoom_resample(const DenseTensor& in, std::span<const T> src, DenseTensor& out,
                   std::span<T> dst, uint32_t out_h, uint32_t out_w, uint32_t row_offset,
                   uint32_t col_offset) {
  const double row_ratio = static_cast<double>(in.height()) / out_h;
  const double col_ratio = static_cast<double>(in.width()) / out_w;
  for (uint32_t y = 0; y < out_h; ++y) {
    const auto src_y = std::min<uint32_t>(
        in.height() - 1, static_cast<uint32_t>((y + 0.5) * row_ratio));
    for (uint32_t x = 0; x < out_w; ++x) {
      const auto src_x = std::min<uint32_t>(
          in.width() - 1, static_cast<uint32_t>((x + 0.5) * col_ratio));
      for (uint32_t c = 0; c < in.channels(); ++c) {
        dst[out.index(c, row_offset + y, col_offset + x)] = src[in.index(c, src_y, src_x)];
      }
    }
  }
}

}  // namespace

RpsBranch rps_draw(const RpsConfig& config, std::mt19937_64& rng) {
  check_probability(config.s, "rps suppression probability s");
  check_probability(config.p, "rps positive probability p");
  const double r1 = uniform01(rng);
  const double r2 = uniform01(rng);
  if (r1 >= config.s) return RpsBranch::Identity;
  if (r2 >= config.p) return RpsBranch::KeepPositiveOnly;
  return RpsBranch::KeepNegativeOnly;
}

RpsBranch rps_draw(const RpsConfig& config, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return rps_draw(config, rng);
}

DenseTensor rps_apply(const DenseTensor& tensor, RpsBranch branch) {
  DenseTensor out = tensor;
  if (branch == RpsBranch::Identity) return out;

  const bool keep_positive = (branch == RpsBranch::KeepPositiveOnly);
  if (sign_valued(tensor.format())) {
    zero_where_sign<int8_t>(out.i8(), keep_positive ? int8_t{-1} : int8_t{1});
  } else if (tensor.format() == Format::Shist) {
    auto data = out.u8();
    zero_channel_group<uint8_t>(out, data, !keep_positive);
  } else if (tensor.format() == Format::Voxel) {
    auto data = out.f32();
    zero_channel_group<float>(out, data, !keep_positive);
  } else {
    raise(Errc::invalid_argument, "unknown format tag");
  }
  return out;
}

DenseTensor hflip(const DenseTensor& tensor) {
  DenseTensor out(tensor.format(), tensor.window(), tensor.geometry());
  switch (tensor.dtype()) {
    case Dtype::TernaryI8: flip_columns<int8_t>(tensor, tensor.i8(), out, out.i8()); break;
    case Dtype::CountU8: flip_columns<uint8_t>(tensor, tensor.u8(), out, out.u8()); break;
    case Dtype::F32: flip_columns<float>(tensor, tensor.f32(), out, out.f32()); break;
  }
  return out;
}

DenseTensor zoom_out(const DenseTensor& tensor, double scale, uint32_t row_offset,
                     uint32_t col_offset) {
  if (!(scale >= 1.0 && scale <= 1.2)) {
    raise(Errc::invalid_argument, "zoom-out scale must lie in [1.0, 1.2]");
  }
  const auto out_h = std::max<uint32_t>(
      1, static_cast<uint32_t>(std::floor(tensor.height() / scale)));
  const auto out_w = std::max<uint32_t>(
      1, static_cast<uint32_t>(std::floor(tensor.width() / scale)));
  if (row_offset + out_h > tensor.height() || col_offset + out_w > tensor.width()) {
    raise(Errc::invalid_argument, "zoom-out placement lies outside the canvas");
  }
  DenseTensor out(tensor.format(), tensor.window(), tensor.geometry());
  switch (tensor.dtype()) {
    case Dtype::TernaryI8:
      zoom_resample<int8_t>(tensor, tensor.i8(), out, out.i8(), out_h, out_w, row_offset,
                            col_offset);
      break;
    case Dtype::CountU8:
      zoom_resample<uint8_t>(tensor, tensor.u8(), out, out.u8(), out_h, out_w, row_offset,
                             col_offset);
      break;
    case Dtype::F32:
      zoom_resample<float>(tensor, tensor.f32(), out, out.f32(), out_h, out_w, row_offset,
                           col_offset);
      break;
  }
  return out;
}

AugSequenceDraw draw_sequence(const AugConfig& config, SensorGeometry geometry, uint64_t seed) {
  check_probability(config.hflip_prob, "hflip probability");
  check_probability(config.zoom_prob, "zoom probability");
  if (geometry.width < 1 || geometry.height < 1) {
    raise(Errc::invalid_argument, "sensor geometry must be at least 1x1");
  }

  std::mt19937_64 rng(seed);
  AugSequenceDraw draw;
  draw.seed = seed;
  draw.rps = rps_draw(config.rps, rng);
  draw.hflip = uniform01(rng) < config.hflip_prob;
  const bool zoomed = uniform01(rng) < config.zoom_prob;
  const double scale = 1.0 + 0.2 * uniform01(rng);
  const auto out_h =
      std::max<uint32_t>(1, static_cast<uint32_t>(std::floor(geometry.height / scale)));
  const auto out_w =
      std::max<uint32_t>(1, static_cast<uint32_t>(std::floor(geometry.width / scale)));
  draw.zoom_row = static_cast<uint32_t>(uniform_index(rng, geometry.height - out_h + 1));
  draw.zoom_col = static_cast<uint32_t>(uniform_index(rng, geometry.width - out_w + 1));
  if (zoomed) draw.zoom_scale = scale;
  return draw;
}

DenseTensor apply_draw(const DenseTensor& tensor, const AugSequenceDraw& draw) {
  DenseTensor out = rps_apply(tensor, draw.rps);
  if (draw.hflip) out = hflip(out);
  if (draw.zoom_scale) out = zoom_out(out, *draw.zoom_scale, draw.zoom_row, draw.zoom_col);
  return out;
}

std::vector<DenseTensor> apply_sequence(std::span<const DenseTensor> tensors,
                                        const AugSequenceDraw& draw) {
  std::vector<DenseTensor> out;
  out.reserve(tensors.size());
  for (const DenseTensor& tensor : tensors) {
    if (tensor.format() != tensors.front().format() ||
        tensor.dims() != tensors.front().dims()) {
      raise(Errc::invalid_argument, "sequence tensors must share format and dims");
    }
    out.push_back(apply_draw(tensor, draw));
  }
  return out;
}

}  // namespace evtcodec
