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

#include "core/events.hpp"

#include <limits>
#include <string>
#include <utility>

namespace evtcodec {

EventStream::EventStream(SensorGeometry geometry, std::vector<Event> events)
    : geometry_(geometry), events_(std::move(events)) {
  if (geometry_.width < 1 || geometry_.height < 1) {
    raise(Errc::invalid_argument, "sensor geometry must be at least 1x1");
  }
  uint64_t prev_t = 0;
  for (size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (i > 0 && e.t < prev_t) {
      raise(Errc::invalid_argument,
            "event " + std::to_string(i) + ": timestamps must be non-decreasing");
    }
    if (e.p != 1 && e.p != -1) {
      raise(Errc::invalid_argument,
            "event " + std::to_string(i) + ": polarity must be +1 or -1");
    }
    if (e.x >= geometry_.width || e.y >= geometry_.height) {
      raise(Errc::invalid_argument,
            "event " + std::to_string(i) + ": coordinates outside sensor geometry");
    }
    prev_t = e.t;
  }
}

uint32_t assign_bin(uint64_t t, const TimeWindow& window) {
  if (window.t_end <= window.t_start || window.bins < 1) {
    raise(Errc::invalid_argument, "time window must have t_end > t_start and bins >= 1");
  }
  if (t < window.t_start || t > window.t_end) {
    raise(Errc::out_of_window, "timestamp " + std::to_string(t) + " outside window [" +
                                   std::to_string(window.t_start) + ", " +
                                   std::to_string(window.t_end) + "]");
  }
  const auto offset = static_cast<unsigned __int128>(t - window.t_start);
  const uint64_t span = window.t_end - window.t_start;
  auto bin = static_cast<uint64_t>(offset * window.bins / span);
  // t == t_end would fall one past the last bin; the final bin is closed.
  if (bin >= window.bins) bin = window.bins - 1;
  return static_cast<uint32_t>(bin);
}

std::vector<Chunk> chunk_stream(const EventStream& stream, uint64_t window_len_us,
                                uint32_t bins) {
  if (window_len_us == 0) raise(Errc::invalid_argument, "window length must be positive");
  if (bins < 1) raise(Errc::invalid_argument, "bins must be >= 1");

  std::vector<Chunk> chunks;
  if (stream.empty()) return chunks;

  const std::vector<Event>& events = stream.events();
  const uint64_t anchor = events.front().t;
  const uint64_t last_index = (events.back().t - anchor) / window_len_us;
  if (last_index + 1 > (std::numeric_limits<uint64_t>::max() - anchor) / window_len_us) {
    raise(Errc::unsupported, "chunk windows overflow the 64-bit microsecond range");
  }

  chunks.reserve(last_index + 1);
  size_t i = 0;
  for (uint64_t k = 0; k <= last_index; ++k) {
    const uint64_t w_start = anchor + k * window_len_us;
    const uint64_t w_end = w_start + window_len_us;
    std::vector<Event> slice;
    while (i < events.size() && events[i].t < w_end) {
      slice.push_back(events[i]);
      ++i;
    }
    chunks.push_back(Chunk{EventStream(stream.geometry(), std::move(slice)),
                           TimeWindow{w_start, w_end, bins}});
  }
  return chunks;
}

}  // namespace evtcodec
