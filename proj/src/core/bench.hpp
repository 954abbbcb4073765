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

#ifndef EVTCODEC_CORE_BENCH_HPP
#define EVTCODEC_CORE_BENCH_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "core/encoders.hpp"

namespace evtcodec {

// Size/throughput model: encoded bytes are non_zeros * record_bytes, the
// compression ratio divides the raw event payload (raw_event_bytes per event,
// 4 by default) by the encoded size, and bandwidth divides encoded bytes by
// the sampling window plus the encoding latency. MB means 2^20 bytes.

inline constexpr double kBytesPerMb = 1048576.0;
inline constexpr uint32_t kDefaultRawEventBytes = 4;

struct DerivedSizes {
  uint64_t encoded_bytes = 0;
  std::optional<double> compression_ratio;  // absent when nothing was encoded
  std::optional<double> bandwidth_mbs;
};

DerivedSizes compute_sizes(uint64_t non_zeros, uint32_t record_bytes, uint64_t events,
                           uint32_t raw_event_bytes, double window_seconds,
                           double latency_seconds);

/// Metrics for one chunk under one encoding.
struct EncodingReport {
  Format format = Format::Vtei;
  uint64_t events = 0;
  double latency_seconds = 0.0;  // median over the measured repetitions
  double event_rate_mevs = 0.0;
  uint64_t non_zeros = 0;
  uint64_t encoded_bytes = 0;
  uint64_t raw_bytes = 0;
  std::optional<double> compression_ratio;
  std::optional<double> bandwidth_mbs;
  std::vector<double> latency_samples_seconds;

  double encoded_mb() const { return static_cast<double>(encoded_bytes) / kBytesPerMb; }
};

/// Runs the encoder `repetitions` times (after one discarded warm-up) and
/// reports the median wall-clock latency plus the size model figures.
/// Latency measurement is single-threaded.
EncodingReport measure_encode(const EventStream& chunk, const TimeWindow& window,
                              Format format, uint32_t repetitions,
                              uint32_t raw_event_bytes = kDefaultRawEventBytes);

enum class Scenario : uint8_t { Average = 0, Maximum = 1, Minimum = 2 };
const char* scenario_name(Scenario scenario);
Scenario scenario_from_name(std::string_view name);

/// Reports for the average-, maximum-, and minimum-event chunks of a corpus.
struct BenchSummary {
  uint64_t window_len_us = 0;
  uint32_t bins = 0;
  uint32_t raw_event_bytes = kDefaultRawEventBytes;

  struct Row {
    Scenario scenario = Scenario::Average;
    EncodingReport report;
  };
  std::vector<Row> rows;  // scenario-major, formats in requested order
};

/// Chunks every stream, picks the maximum-, minimum-, and nearest-to-mean
/// event chunks (empty chunks are ignored for selection), and measures every
/// requested format on each. Errc::invalid_argument when no chunk has events.
BenchSummary bench_corpus(std::span<const EventStream> streams, uint64_t window_len_us,
                          uint32_t bins, std::span<const Format> formats,
                          uint32_t repetitions, uint32_t raw_event_bytes = kDefaultRawEventBytes);

/// Replays externally supplied (events, non_zeros, latency_ms) triples through
/// the size model; the input is a CSV with header
/// `format,scenario,events,non_zeros,latency_ms`. Lets reports be regenerated
/// without the source recordings or timing noise.
BenchSummary replay_from_counts(std::istream& counts_csv, SensorGeometry geometry,
                                uint32_t bins, uint64_t window_len_us,
                                uint32_t raw_event_bytes = kDefaultRawEventBytes);

void write_report_csv(const BenchSummary& summary, std::ostream& out);
void write_report_json(const BenchSummary& summary, std::ostream& out);

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_BENCH_HPP
