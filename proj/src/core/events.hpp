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

#ifndef EVTCODEC_CORE_EVENTS_HPP
#define EVTCODEC_CORE_EVENTS_HPP

#include <cstdint>
#include <vector>

#include "core/error.hpp"

namespace evtcodec {

struct SensorGeometry {
  uint16_t width = 0;
  uint16_t height = 0;

  bool operator==(const SensorGeometry&) const = default;
};

/// One camera event. Polarity is +1 or -1, never 0; timestamps are
/// microseconds.
struct Event {
  uint64_t t = 0;
  uint16_t x = 0;
  uint16_t y = 0;
  int8_t p = 0;

  bool operator==(const Event&) const = default;
};

/// Sampling window [t_start, t_end] split into `bins` uniform temporal bins.
struct TimeWindow {
  uint64_t t_start = 0;
  uint64_t t_end = 0;
  uint32_t bins = 1;

  bool operator==(const TimeWindow&) const = default;

  uint64_t span_us() const { return t_end - t_start; }
  double span_seconds() const { return static_cast<double>(t_end - t_start) * 1e-6; }
};

/// A validated, time-ordered event sequence bound to a sensor geometry.
/// Immutable after construction; safe to share across threads.
class EventStream {
 public:
  EventStream() = default;

  /// Throws Errc::invalid_argument on degenerate geometry, timestamps out of
  /// order, polarity not in {-1,+1}, or coordinates outside the geometry.
  EventStream(SensorGeometry geometry, std::vector<Event> events);

  const SensorGeometry& geometry() const { return geometry_; }
  const std::vector<Event>& events() const { return events_; }
  size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  bool operator==(const EventStream&) const = default;

 private:
  SensorGeometry geometry_{1, 1};
  std::vector<Event> events_;
};

/// Uniform temporal bin for a timestamp inside `window`. The right endpoint
/// t == t_end lands in the final bin. Throws Errc::out_of_window when t lies
/// outside [t_start, t_end].
uint32_t assign_bin(uint64_t t, const TimeWindow& window);

struct Chunk {
  EventStream events;
  TimeWindow window;
};

/// Partitions a stream into consecutive half-open windows
/// [k*L, (k+1)*L) anchored at the first event timestamp. Windows with no
/// events are still emitted; an empty stream yields no chunks.
std::vector<Chunk> chunk_stream(const EventStream& stream, uint64_t window_len_us,
                                uint32_t bins);

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_EVENTS_HPP
