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

#include "core/encoders.hpp"

#include <cmath>
#include <vector>

namespace evtcodec {

namespace {

void check_event_in_bounds(const Event& e, const SensorGeometry& geometry) {
  if (e.x >= geometry.width || e.y >= geometry.height) {
    raise(Errc::bounds, "event outside sensor geometry");
  }
}

void check_event_in_window(const Event& e, const TimeWindow& window) {
  if (e.t < window.t_start || e.t > window.t_end) {
    raise(Errc::out_of_window, "chunk event outside encoding window");
  }
}

// Streaming uniform-bin lookup for time-sorted events: bin edges are
// precomputed once so the per-event cost is a compare, not a division.
// Agrees with assign_bin everywhere, including the closed right endpoint.
class BinCursor {
 public:
  explicit BinCursor(const TimeWindow& window) : window_(window) {
    if (window.t_end <= window.t_start || window.bins < 1) {
      raise(Errc::invalid_argument, "time window must have t_end > t_start and bins >= 1");
    }
    const uint64_t span = window.span_us();
    edges_.resize(window.bins + 1);
    for (uint32_t i = 0; i < window.bins; ++i) {
      // First offset belonging to bin i: ceil(i * span / bins).
      edges_[i] = static_cast<uint64_t>(
          (static_cast<unsigned __int128>(i) * span + window.bins - 1) / window.bins);
    }
    edges_[window.bins] = span + 1;  // the right endpoint stays in the last bin
  }

  uint32_t advance(uint64_t t) {
    if (t < window_.t_start || t > window_.t_end) {
      raise(Errc::out_of_window, "chunk event outside encoding window");
    }
    const uint64_t offset = t - window_.t_start;
    while (offset >= edges_[bin_ + 1]) ++bin_;
    return bin_;
  }

 private:
  TimeWindow window_;
  std::vector<uint64_t> edges_;
  uint32_t bin_ = 0;
};

}  // namespace

DenseTensor encode_vtei(const EventStream& chunk, const TimeWindow& window) {
  DenseTensor tensor(Format::Vtei, window, chunk.geometry());
  auto data = tensor.i8();
  BinCursor cursor(window);
  for (const Event& e : chunk.events()) {
    check_event_in_bounds(e, chunk.geometry());
    data[tensor.index(cursor.advance(e.t), e.y, e.x)] = e.p;
  }
  return tensor;
}

DenseTensor encode_shist(const EventStream& chunk, const TimeWindow& window) {
  DenseTensor tensor(Format::Shist, window, chunk.geometry());
  auto data = tensor.u8();
  BinCursor cursor(window);
  for (const Event& e : chunk.events()) {
    check_event_in_bounds(e, chunk.geometry());
    const uint32_t bin = cursor.advance(e.t);
    const uint32_t channel = (e.p > 0) ? window.bins + bin : bin;
    uint8_t& cell = data[tensor.index(channel, e.y, e.x)];
    if (cell < 255) ++cell;
  }
  return tensor;
}

DenseTensor encode_mdes(const EventStream& chunk, const TimeWindow& window) {
  DenseTensor tensor(Format::Mdes, window, chunk.geometry());
  auto data = tensor.i8();
  const uint64_t span = window.span_us();
  for (const Event& e : chunk.events()) {
    check_event_in_bounds(e, chunk.geometry());
    check_event_in_window(e, window);
    // Deepest bin whose trailing sub-window [t_end - T/2^i, t_end] still
    // contains the event: (t_end - t) * 2^i <= T, exact in 128-bit.
    const uint64_t age = window.t_end - e.t;
    uint32_t deepest = 0;
    while (deepest + 1 < window.bins &&
           (static_cast<unsigned __int128>(age) << (deepest + 1)) <= span) {
      ++deepest;
    }
    for (uint32_t bin = 0; bin <= deepest; ++bin) {
      data[tensor.index(bin, e.y, e.x)] = e.p;
    }
  }
  return tensor;
}

DenseTensor encode_voxel(const EventStream& chunk, const TimeWindow& window) {
  if (window.bins < 2) {
    raise(Errc::invalid_argument, "voxel grid encoding requires at least 2 bins");
  }
  DenseTensor tensor(Format::Voxel, window, chunk.geometry());
  auto data = tensor.f32();
  const double span = static_cast<double>(window.span_us());
  for (const Event& e : chunk.events()) {
    check_event_in_bounds(e, chunk.geometry());
    check_event_in_window(e, window);
    const double t_star =
        static_cast<double>(e.t - window.t_start) / span * (window.bins - 1);
    const uint32_t group = (e.p > 0) ? 1 : 0;
    const auto lo = static_cast<int64_t>(std::floor(t_star));
    for (int64_t bin = lo; bin <= lo + 1; ++bin) {
      if (bin < 0 || bin >= static_cast<int64_t>(window.bins)) continue;
      const auto weight =
          static_cast<float>(1.0 - std::abs(static_cast<double>(bin) - t_star));
      if (weight <= 0.0f) continue;
      data[tensor.index(group * window.bins + static_cast<uint32_t>(bin), e.y, e.x)] +=
          weight;
    }
  }
  return tensor;
}

DenseTensor encode(const EventStream& chunk, const TimeWindow& window, Format format) {
  switch (format) {
    case Format::Vtei: return encode_vtei(chunk, window);
    case Format::Shist: return encode_shist(chunk, window);
    case Format::Mdes: return encode_mdes(chunk, window);
    case Format::Voxel: return encode_voxel(chunk, window);
  }
  raise(Errc::invalid_argument, "unknown format tag");
}

}  // namespace evtcodec
