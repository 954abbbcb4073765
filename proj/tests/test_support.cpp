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

#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "core/rng.hpp"

namespace testsupport {

namespace {

// Event indices grouped per pixel, preserving stream order.
std::vector<std::vector<size_t>> per_pixel(const EventStream& chunk) {
  const auto& g = chunk.geometry();
  std::vector<std::vector<size_t>> groups(static_cast<size_t>(g.width) * g.height);
  for (size_t i = 0; i < chunk.events().size(); ++i) {
    const Event& e = chunk.events()[i];
    groups[static_cast<size_t>(e.y) * g.width + e.x].push_back(i);
  }
  return groups;
}

// Interval-membership reading of the uniform binning: t lands in bin i when
// i*T <= (t - t0)*B < (i+1)*T, and the right endpoint closes the last bin.
bool in_uniform_bin(uint64_t t, const TimeWindow& w, uint32_t i) {
  const auto scaled = static_cast<unsigned __int128>(t - w.t_start) * w.bins;
  const auto span = static_cast<unsigned __int128>(w.t_end - w.t_start);
  if (t == w.t_end) return i == w.bins - 1;
  return scaled >= i * span && scaled < (i + 1) * span;
}

// Trailing MDES sub-window of length T/2^i: t qualifies when
// (t_end - t) * 2^i <= T.
bool in_trailing_window(uint64_t t, const TimeWindow& w, uint32_t i) {
  const auto age = static_cast<unsigned __int128>(w.t_end - t);
  return (age << i) <= static_cast<unsigned __int128>(w.t_end - w.t_start);
}

}  // namespace

std::vector<int8_t> vtei_oracle(const EventStream& chunk, const TimeWindow& window) {
  const auto& g = chunk.geometry();
  const auto groups = per_pixel(chunk);
  std::vector<int8_t> cells(static_cast<size_t>(window.bins) * g.height * g.width, 0);
  for (uint32_t bin = 0; bin < window.bins; ++bin) {
    for (uint32_t y = 0; y < g.height; ++y) {
      for (uint32_t x = 0; x < g.width; ++x) {
        int8_t value = 0;
        for (size_t i : groups[static_cast<size_t>(y) * g.width + x]) {
          const Event& e = chunk.events()[i];
          if (in_uniform_bin(e.t, window, bin)) value = e.p;
        }
        cells[(static_cast<size_t>(bin) * g.height + y) * g.width + x] = value;
      }
    }
  }
  return cells;
}

std::vector<uint64_t> shist_oracle_counts(const EventStream& chunk, const TimeWindow& window) {
  const auto& g = chunk.geometry();
  const auto groups = per_pixel(chunk);
  std::vector<uint64_t> cells(static_cast<size_t>(2 * window.bins) * g.height * g.width, 0);
  for (uint32_t c = 0; c < 2 * window.bins; ++c) {
    const int8_t polarity = (c < window.bins) ? -1 : 1;
    const uint32_t bin = c % window.bins;
    for (uint32_t y = 0; y < g.height; ++y) {
      for (uint32_t x = 0; x < g.width; ++x) {
        uint64_t count = 0;
        for (size_t i : groups[static_cast<size_t>(y) * g.width + x]) {
          const Event& e = chunk.events()[i];
          if (e.p == polarity && in_uniform_bin(e.t, window, bin)) ++count;
        }
        cells[(static_cast<size_t>(c) * g.height + y) * g.width + x] = count;
      }
    }
  }
  return cells;
}

std::vector<int8_t> mdes_oracle(const EventStream& chunk, const TimeWindow& window) {
  const auto& g = chunk.geometry();
  const auto groups = per_pixel(chunk);
  std::vector<int8_t> cells(static_cast<size_t>(window.bins) * g.height * g.width, 0);
  for (uint32_t bin = 0; bin < window.bins; ++bin) {
    for (uint32_t y = 0; y < g.height; ++y) {
      for (uint32_t x = 0; x < g.width; ++x) {
        int8_t value = 0;
        for (size_t i : groups[static_cast<size_t>(y) * g.width + x]) {
          const Event& e = chunk.events()[i];
          if (in_trailing_window(e.t, window, bin)) value = e.p;
        }
        cells[(static_cast<size_t>(bin) * g.height + y) * g.width + x] = value;
      }
    }
  }
  return cells;
}

std::vector<float> voxel_oracle(const EventStream& chunk, const TimeWindow& window) {
  const auto& g = chunk.geometry();
  const auto groups = per_pixel(chunk);
  const double span = static_cast<double>(window.t_end - window.t_start);
  std::vector<float> cells(static_cast<size_t>(2 * window.bins) * g.height * g.width, 0.0f);
  for (uint32_t c = 0; c < 2 * window.bins; ++c) {
    const int8_t polarity = (c < window.bins) ? -1 : 1;
    const uint32_t bin = c % window.bins;
    for (uint32_t y = 0; y < g.height; ++y) {
      for (uint32_t x = 0; x < g.width; ++x) {
        // float32 accumulation in stream order, matching the format contract
        float sum = 0.0f;
        for (size_t i : groups[static_cast<size_t>(y) * g.width + x]) {
          const Event& e = chunk.events()[i];
          if (e.p != polarity) continue;
          const double t_star =
              static_cast<double>(e.t - window.t_start) / span * (window.bins - 1);
          const double weight = 1.0 - std::abs(static_cast<double>(bin) - t_star);
          if (weight > 0.0) sum += static_cast<float>(weight);
        }
        cells[(static_cast<size_t>(c) * g.height + y) * g.width + x] = sum;
      }
    }
  }
  return cells;
}

std::vector<uint8_t> bitpack_oracle(const std::vector<std::pair<uint64_t, uint32_t>>& fields,
                                    uint32_t record_bytes) {
  std::vector<uint8_t> bytes(record_bytes, 0);
  uint32_t position = 0;
  for (const auto& [value, width] : fields) {
    for (uint32_t b = 0; b < width; ++b, ++position) {
      if ((value >> b) & 1ull) {
        bytes[position / 8] |= static_cast<uint8_t>(1u << (position % 8));
      }
    }
  }
  return bytes;
}

RandomChunk random_chunk(std::mt19937_64& rng, uint16_t width, uint16_t height,
                         size_t max_events, uint32_t bins) {
  using evtcodec::uniform01;
  using evtcodec::uniform_index;

  const TimeWindow window{0, 50000, bins};
  const size_t count = uniform_index(rng, max_events + 1);
  std::vector<uint64_t> times(count);
  for (uint64_t& t : times) t = uniform_index(rng, window.t_end + 1);
  std::sort(times.begin(), times.end());

  std::vector<Event> events(count);
  for (size_t i = 0; i < count; ++i) {
    events[i].t = times[i];
    events[i].x = static_cast<uint16_t>(uniform_index(rng, width));
    events[i].y = static_cast<uint16_t>(uniform_index(rng, height));
    events[i].p = uniform01(rng) < 0.5 ? int8_t{-1} : int8_t{1};
  }
  return RandomChunk{EventStream(SensorGeometry{width, height}, std::move(events)), window};
}

const std::vector<PublishedCell>& published_cells() {
  static const std::vector<PublishedCell> cells = {
      {"vtei", "average", 192063, 96017, 1.5, 0.27, 2.67, 5.33},
      {"shist", "average", 192063, 125234, 2.3, 0.48, 1.53, 9.13},
      {"mdes", "average", 192063, 89532, 3.4, 0.26, 2.86, 4.80},
      {"voxel", "average", 192063, 125232, 5.1, 0.60, 1.23, 10.84},
      {"vtei", "maximum", 327030, 172654, 1.8, 0.49, 2.53, 9.54},
      {"shist", "maximum", 327030, 219848, 3.9, 0.84, 1.49, 15.56},
      {"mdes", "maximum", 327030, 145305, 4.5, 0.42, 3.00, 7.63},
      {"voxel", "maximum", 327030, 219846, 7.2, 1.05, 1.19, 18.33},
      {"vtei", "minimum", 44962, 20310, 0.8, 0.058, 2.95, 1.14},
      {"shist", "minimum", 44962, 29268, 1.0, 0.11, 1.54, 2.19},
      {"mdes", "minimum", 44962, 19832, 1.8, 0.057, 3.02, 1.10},
      {"voxel", "minimum", 44962, 29266, 2.1, 0.14, 1.23, 2.68},
  };
  return cells;
}

std::string published_counts_csv() {
  std::string csv = "format,scenario,events,non_zeros,latency_ms\n";
  char line[128];
  for (const PublishedCell& cell : published_cells()) {
    std::snprintf(line, sizeof(line), "%s,%s,%llu,%llu,%.1f\n", cell.format, cell.scenario,
                  static_cast<unsigned long long>(cell.events),
                  static_cast<unsigned long long>(cell.non_zeros), cell.latency_ms);
    csv += line;
  }
  return csv;
}

DenseTensor random_tensor(std::mt19937_64& rng, Format format, uint16_t width, uint16_t height,
                          uint32_t bins, uint32_t fill_permille) {
  using evtcodec::uniform01;
  using evtcodec::uniform_index;

  DenseTensor tensor(format, TimeWindow{0, 50000, bins}, SensorGeometry{width, height});
  const double fill = fill_permille / 1000.0;
  switch (tensor.dtype()) {
    case evtcodec::Dtype::TernaryI8:
      for (int8_t& v : tensor.i8()) {
        if (uniform01(rng) < fill) v = uniform01(rng) < 0.5 ? -1 : 1;
      }
      break;
    case evtcodec::Dtype::CountU8:
      for (uint8_t& v : tensor.u8()) {
        if (uniform01(rng) < fill) v = static_cast<uint8_t>(1 + uniform_index(rng, 255));
      }
      break;
    case evtcodec::Dtype::F32:
      for (float& v : tensor.f32()) {
        if (uniform01(rng) < fill) v = static_cast<float>(uniform01(rng) * 8.0 + 1e-3);
      }
      break;
  }
  return tensor;
}

}  // namespace testsupport
