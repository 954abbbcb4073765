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

#include "core/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "core/coo.hpp"

namespace evtcodec {

namespace {

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const size_t n = samples.size();
  if (n == 0) return 0.0;
  return (n % 2 == 1) ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

uint64_t parse_u64_field(std::string_view field, const std::string& context) {
  uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    raise(Errc::parse, context + ": expected an unsigned integer, got '" +
                           std::string(field) + "'");
  }
  return value;
}

double parse_double_field(std::string_view field, const std::string& context) {
  try {
    size_t used = 0;
    const double value = std::stod(std::string(field), &used);
    if (used != field.size() || !(value >= 0.0) || !std::isfinite(value)) throw std::exception();
    return value;
  } catch (...) {
    raise(Errc::parse,
          context + ": expected a non-negative number, got '" + std::string(field) + "'");
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

DerivedSizes compute_sizes(uint64_t non_zeros, uint32_t record_bytes, uint64_t events,
                           uint32_t raw_event_bytes, double window_seconds,
                           double latency_seconds) {
  DerivedSizes sizes;
  sizes.encoded_bytes = non_zeros * record_bytes;
  if (sizes.encoded_bytes == 0) return sizes;
  const double raw = static_cast<double>(events) * raw_event_bytes;
  sizes.compression_ratio = raw / static_cast<double>(sizes.encoded_bytes);
  sizes.bandwidth_mbs = static_cast<double>(sizes.encoded_bytes) /
                        (window_seconds + latency_seconds) / kBytesPerMb;
  return sizes;
}

EncodingReport measure_encode(const EventStream& chunk, const TimeWindow& window,
                              Format format, uint32_t repetitions, uint32_t raw_event_bytes) {
  if (repetitions < 1) raise(Errc::invalid_argument, "repetitions must be >= 1");

  using clock = std::chrono::steady_clock;
  DenseTensor encoded = encode(chunk, window, format);  // warm-up, discarded

  std::vector<double> samples;
  samples.reserve(repetitions);
  for (uint32_t r = 0; r < repetitions; ++r) {
    const auto start = clock::now();
    encoded = encode(chunk, window, format);
    const auto stop = clock::now();
    samples.push_back(std::chrono::duration<double>(stop - start).count());
  }

  EncodingReport report;
  report.format = format;
  report.events = chunk.size();
  report.latency_samples_seconds = samples;
  // Sub-nanosecond medians are below the clock's resolution; floor them so
  // the derived rates stay finite.
  report.latency_seconds = std::max(median(samples), 1e-9);
  report.event_rate_mevs =
      report.events == 0
          ? 0.0
          : static_cast<double>(report.events) / report.latency_seconds / 1e6;
  report.non_zeros = count_nonzeros(encoded);
  report.raw_bytes = report.events * raw_event_bytes;

  const CooLayout layout = layout_for(format, chunk.geometry(), window.bins);
  const DerivedSizes sizes =
      compute_sizes(report.non_zeros, layout.record_bytes, report.events, raw_event_bytes,
                    window.span_seconds(), report.latency_seconds);
  report.encoded_bytes = sizes.encoded_bytes;
  report.compression_ratio = sizes.compression_ratio;
  report.bandwidth_mbs = sizes.bandwidth_mbs;
  return report;
}

const char* scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::Average: return "average";
    case Scenario::Maximum: return "maximum";
    case Scenario::Minimum: return "minimum";
  }
  raise(Errc::invalid_argument, "unknown scenario");
}

Scenario scenario_from_name(std::string_view name) {
  if (name == "average") return Scenario::Average;
  if (name == "maximum") return Scenario::Maximum;
  if (name == "minimum") return Scenario::Minimum;
  raise(Errc::parse, "unknown scenario name: " + std::string(name));
}

BenchSummary bench_corpus(std::span<const EventStream> streams, uint64_t window_len_us,
                          uint32_t bins, std::span<const Format> formats,
                          uint32_t repetitions, uint32_t raw_event_bytes) {
  if (formats.empty()) raise(Errc::invalid_argument, "no formats requested");

  std::vector<Chunk> chunks;
  for (const EventStream& stream : streams) {
    for (Chunk& chunk : chunk_stream(stream, window_len_us, bins)) {
      if (!chunk.events.empty()) chunks.push_back(std::move(chunk));
    }
  }
  if (chunks.empty()) {
    raise(Errc::invalid_argument, "corpus has no chunk with events");
  }

  size_t max_i = 0, min_i = 0;
  uint64_t total = 0;
  for (size_t i = 0; i < chunks.size(); ++i) {
    const size_t n = chunks[i].events.size();
    total += n;
    if (n > chunks[max_i].events.size()) max_i = i;
    if (n < chunks[min_i].events.size()) min_i = i;
  }
  const double mean = static_cast<double>(total) / static_cast<double>(chunks.size());
  size_t avg_i = 0;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < chunks.size(); ++i) {
    const double distance = std::abs(static_cast<double>(chunks[i].events.size()) - mean);
    if (distance < best) {
      best = distance;
      avg_i = i;
    }
  }

  BenchSummary summary;
  summary.window_len_us = window_len_us;
  summary.bins = bins;
  summary.raw_event_bytes = raw_event_bytes;
  const std::pair<Scenario, size_t> picks[] = {{Scenario::Average, avg_i},
                                               {Scenario::Maximum, max_i},
                                               {Scenario::Minimum, min_i}};
  for (const auto& [scenario, index] : picks) {
    for (Format format : formats) {
      summary.rows.push_back(
          {scenario, measure_encode(chunks[index].events, chunks[index].window, format,
                                    repetitions, raw_event_bytes)});
    }
  }
  return summary;
}

BenchSummary replay_from_counts(std::istream& counts_csv, SensorGeometry geometry,
                                uint32_t bins, uint64_t window_len_us,
                                uint32_t raw_event_bytes) {
  BenchSummary summary;
  summary.window_len_us = window_len_us;
  summary.bins = bins;
  summary.raw_event_bytes = raw_event_bytes;
  const double window_seconds = static_cast<double>(window_len_us) * 1e-6;

  std::string line;
  if (!std::getline(counts_csv, line)) raise(Errc::parse, "counts csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "format,scenario,events,non_zeros,latency_ms") {
    raise(Errc::parse, "counts csv: expected header format,scenario,events,non_zeros,latency_ms");
  }

  size_t line_no = 1;
  while (std::getline(counts_csv, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string context = "counts csv line " + std::to_string(line_no);
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 5) raise(Errc::parse, context + ": expected 5 fields");

    EncodingReport report;
    report.format = format_from_name(fields[0]);
    const Scenario scenario = scenario_from_name(fields[1]);
    report.events = parse_u64_field(fields[2], context);
    report.non_zeros = parse_u64_field(fields[3], context);
    report.latency_seconds = parse_double_field(fields[4], context) * 1e-3;
    if (report.latency_seconds <= 0.0) {
      raise(Errc::parse, context + ": latency must be positive");
    }
    report.latency_samples_seconds = {report.latency_seconds};
    report.event_rate_mevs =
        report.events == 0
            ? 0.0
            : static_cast<double>(report.events) / report.latency_seconds / 1e6;
    report.raw_bytes = report.events * raw_event_bytes;

    const CooLayout layout = layout_for(report.format, geometry, bins);
    const DerivedSizes sizes =
        compute_sizes(report.non_zeros, layout.record_bytes, report.events, raw_event_bytes,
                      window_seconds, report.latency_seconds);
    report.encoded_bytes = sizes.encoded_bytes;
    report.compression_ratio = sizes.compression_ratio;
    report.bandwidth_mbs = sizes.bandwidth_mbs;
    summary.rows.push_back({scenario, report});
  }
  if (summary.rows.empty()) raise(Errc::parse, "counts csv: no data rows");
  return summary;
}

void write_report_csv(const BenchSummary& summary, std::ostream& out) {
  out << "format,scenario,events,latency_ms,event_rate_mevs,non_zeros,encoded_mb,"
         "compression_ratio,bw_mbs\n";
  char buffer[256];
  for (const BenchSummary::Row& row : summary.rows) {
    const EncodingReport& r = row.report;
    int n = std::snprintf(buffer, sizeof(buffer), "%s,%s,%llu,%.6f,%.4f,%llu,%.6f,",
                          format_name(r.format), scenario_name(row.scenario),
                          static_cast<unsigned long long>(r.events),
                          r.latency_seconds * 1e3, r.event_rate_mevs,
                          static_cast<unsigned long long>(r.non_zeros), r.encoded_mb());
    out.write(buffer, n);
    if (r.compression_ratio) {
      n = std::snprintf(buffer, sizeof(buffer), "%.4f", *r.compression_ratio);
      out.write(buffer, n);
    }
    out << ',';
    if (r.bandwidth_mbs) {
      n = std::snprintf(buffer, sizeof(buffer), "%.4f", *r.bandwidth_mbs);
      out.write(buffer, n);
    }
    out << '\n';
  }
}

void write_report_json(const BenchSummary& summary, std::ostream& out) {
  nlohmann::json root;
  root["window_us"] = summary.window_len_us;
  root["bins"] = summary.bins;
  root["raw_event_bytes"] = summary.raw_event_bytes;
  nlohmann::json scenarios = nlohmann::json::object();
  for (const BenchSummary::Row& row : summary.rows) {
    const EncodingReport& r = row.report;
    nlohmann::json entry;
    entry["events"] = r.events;
    entry["latency_ms"] = r.latency_seconds * 1e3;
    nlohmann::json samples = nlohmann::json::array();
    for (double s : r.latency_samples_seconds) samples.push_back(s * 1e3);
    entry["latency_samples_ms"] = samples;
    entry["event_rate_mevs"] = r.event_rate_mevs;
    entry["non_zeros"] = r.non_zeros;
    entry["encoded_bytes"] = r.encoded_bytes;
    entry["encoded_mb"] = r.encoded_mb();
    entry["compression_ratio"] =
        r.compression_ratio ? nlohmann::json(*r.compression_ratio) : nlohmann::json();
    entry["bw_mbs"] = r.bandwidth_mbs ? nlohmann::json(*r.bandwidth_mbs) : nlohmann::json();
    scenarios[scenario_name(row.scenario)][format_name(r.format)] = std::move(entry);
  }
  root["scenarios"] = std::move(scenarios);
  out << root.dump(2) << '\n';
}

}  // namespace evtcodec
