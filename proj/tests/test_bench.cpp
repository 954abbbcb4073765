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

#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "core/bench.hpp"
#include "core/coo.hpp"
#include "test_support.hpp"

using namespace evtcodec;

namespace {

constexpr SensorGeometry kGen1{304, 240};

EventStream burst(SensorGeometry g, uint64_t t0, size_t count) {
  std::vector<Event> events;
  events.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    events.push_back({t0 + i, static_cast<uint16_t>(i % g.width),
                      static_cast<uint16_t>((i / g.width) % g.height),
                      (i % 2 == 0) ? int8_t{1} : int8_t{-1}});
  }
  return EventStream(g, std::move(events));
}

}  // namespace

TEST_CASE("compute_sizes reproduces the published derived cells") {
  // vtei average: 96,017 nz * 3 B, 192,063 events
  auto sizes = compute_sizes(96017, 3, 192063, 4, 0.050, 0.0015);
  CHECK(sizes.encoded_bytes == 288051);
  CHECK(sizes.encoded_bytes / kBytesPerMb == doctest::Approx(0.27).epsilon(0.05));
  CHECK(*sizes.compression_ratio == doctest::Approx(2.67).epsilon(0.01));
  CHECK(*sizes.bandwidth_mbs == doctest::Approx(5.33).epsilon(0.01));

  // shist average
  sizes = compute_sizes(125234, 4, 192063, 4, 0.050, 0.0023);
  CHECK(sizes.encoded_bytes / kBytesPerMb == doctest::Approx(0.48).epsilon(0.05));
  CHECK(*sizes.compression_ratio == doctest::Approx(1.53).epsilon(0.01));
  CHECK(*sizes.bandwidth_mbs == doctest::Approx(9.13).epsilon(0.01));

  // voxel minimum
  sizes = compute_sizes(29266, 5, 44962, 4, 0.050, 0.0021);
  CHECK(sizes.encoded_bytes / kBytesPerMb == doctest::Approx(0.14).epsilon(0.05));
  CHECK(*sizes.compression_ratio == doctest::Approx(1.23).epsilon(0.01));
  CHECK(*sizes.bandwidth_mbs == doctest::Approx(2.68).epsilon(0.01));
}

TEST_CASE("compute_sizes reports nothing when nothing was encoded") {
  const auto sizes = compute_sizes(0, 3, 0, 4, 0.050, 0.001);
  CHECK(sizes.encoded_bytes == 0);
  CHECK_FALSE(sizes.compression_ratio.has_value());
  CHECK_FALSE(sizes.bandwidth_mbs.has_value());
}

TEST_CASE("measure_encode ties the report to the codec size model") {
  std::mt19937_64 rng(21);
  const auto [chunk, window] = testsupport::random_chunk(rng, 16, 16, 4000, 5);
  const EncodingReport report = measure_encode(chunk, window, Format::Vtei, 3);
  CHECK(report.events == chunk.size());
  CHECK(report.latency_samples_seconds.size() == 3);
  CHECK(report.latency_seconds > 0.0);
  CHECK(report.non_zeros == count_nonzeros(encode_vtei(chunk, window)));
  const CooLayout layout = layout_for(Format::Vtei, chunk.geometry(), window.bins);
  CHECK(report.encoded_bytes == report.non_zeros * layout.record_bytes);
  CHECK(report.encoded_bytes == coo_encode(encode_vtei(chunk, window)).bytes().size());
  CHECK(report.raw_bytes == report.events * 4);
  CHECK(report.event_rate_mevs ==
        doctest::Approx(report.events / report.latency_seconds / 1e6));
  CHECK_THROWS_AS(measure_encode(chunk, window, Format::Vtei, 0), Error);
}

TEST_CASE("measure_encode on an empty chunk") {
  const EncodingReport report =
      measure_encode(EventStream({16, 16}, {}), {0, 50000, 5}, Format::Vtei, 3);
  CHECK(report.events == 0);
  CHECK(report.event_rate_mevs == 0.0);
  CHECK(report.encoded_bytes == 0);
  CHECK_FALSE(report.compression_ratio.has_value());
  CHECK_FALSE(report.bandwidth_mbs.has_value());
}

TEST_CASE("replay reproduces the published event rates") {
  std::istringstream counts(testsupport::published_counts_csv());
  const BenchSummary summary = replay_from_counts(counts, kGen1, 5, 50000);
  REQUIRE(summary.rows.size() == 12);
  // 192,063 events / 1.5 ms and 327,030 / 1.8 ms
  CHECK(summary.rows[0].report.event_rate_mevs == doctest::Approx(128.04).epsilon(0.0001));
  CHECK(summary.rows[4].report.event_rate_mevs == doctest::Approx(181.68).epsilon(0.0001));
  // 44,962 / 0.8 ms
  CHECK(summary.rows[8].report.event_rate_mevs == doctest::Approx(56.20).epsilon(0.0001));
}

TEST_CASE("replay reproduces every published derived cell") {
  std::istringstream counts(testsupport::published_counts_csv());
  const BenchSummary summary = replay_from_counts(counts, kGen1, 5, 50000);
  REQUIRE(summary.rows.size() == testsupport::published_cells().size());
  for (size_t i = 0; i < summary.rows.size(); ++i) {
    const auto& cell = testsupport::published_cells()[i];
    const EncodingReport& report = summary.rows[i].report;
    CHECK(format_name(report.format) == std::string(cell.format));
    CHECK(scenario_name(summary.rows[i].scenario) == std::string(cell.scenario));
    CHECK(std::abs(report.encoded_mb() - cell.encoded_mb) <= 0.01);
    REQUIRE(report.compression_ratio.has_value());
    CHECK(std::abs(*report.compression_ratio - cell.compression_ratio) <= 0.02);
    REQUIRE(report.bandwidth_mbs.has_value());
    CHECK(std::abs(*report.bandwidth_mbs - cell.bw_mbs) <= 0.05);
  }
}

TEST_CASE("replay rejects malformed counts files") {
  std::istringstream bad_header("format,events\n");
  CHECK_THROWS_AS(replay_from_counts(bad_header, kGen1, 5, 50000), Error);
  std::istringstream bad_row("format,scenario,events,non_zeros,latency_ms\nvtei,average,x,1,1\n");
  CHECK_THROWS_AS(replay_from_counts(bad_row, kGen1, 5, 50000), Error);
  std::istringstream no_rows("format,scenario,events,non_zeros,latency_ms\n");
  CHECK_THROWS_AS(replay_from_counts(no_rows, kGen1, 5, 50000), Error);
  std::istringstream zero_latency(
      "format,scenario,events,non_zeros,latency_ms\nvtei,average,1,1,0\n");
  CHECK_THROWS_AS(replay_from_counts(zero_latency, kGen1, 5, 50000), Error);
}

TEST_CASE("bench_corpus picks average, maximum and minimum chunks") {
  const SensorGeometry g{16, 16};
  // Three windows with 100, 300 and 200 events.
  std::vector<Event> events;
  for (const auto& [t0, n] : std::initializer_list<std::pair<uint64_t, size_t>>{
           {0, 100}, {50000, 300}, {100000, 200}}) {
    const EventStream part = burst(g, t0, n);
    events.insert(events.end(), part.events().begin(), part.events().end());
  }
  const EventStream stream(g, std::move(events));
  const Format formats[] = {Format::Vtei};
  const BenchSummary summary = bench_corpus({&stream, 1}, 50000, 5, formats, 2);
  REQUIRE(summary.rows.size() == 3);
  CHECK(summary.rows[0].scenario == Scenario::Average);
  CHECK(summary.rows[0].report.events == 200);
  CHECK(summary.rows[1].scenario == Scenario::Maximum);
  CHECK(summary.rows[1].report.events == 300);
  CHECK(summary.rows[2].scenario == Scenario::Minimum);
  CHECK(summary.rows[2].report.events == 100);
}

TEST_CASE("bench_corpus with a single chunk reports it for all scenarios") {
  const EventStream stream = burst({16, 16}, 0, 150);
  const Format formats[] = {Format::Vtei, Format::Shist};
  const BenchSummary summary = bench_corpus({&stream, 1}, 50000, 5, formats, 1);
  REQUIRE(summary.rows.size() == 6);
  for (const auto& row : summary.rows) CHECK(row.report.events == 150);
}

TEST_CASE("bench_corpus rejects corpora without events") {
  const EventStream empty({16, 16}, {});
  const Format formats[] = {Format::Vtei};
  CHECK_THROWS_AS(bench_corpus({&empty, 1}, 50000, 5, formats, 1), Error);
  CHECK_THROWS_AS(bench_corpus({}, 50000, 5, formats, 1), Error);
}

TEST_CASE("csv report carries the full column set") {
  std::istringstream counts(testsupport::published_counts_csv());
  const BenchSummary summary = replay_from_counts(counts, kGen1, 5, 50000);
  std::ostringstream out;
  write_report_csv(summary, out);
  std::istringstream lines(out.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line ==
        "format,scenario,events,latency_ms,event_rate_mevs,non_zeros,encoded_mb,"
        "compression_ratio,bw_mbs");
  size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find("nan") == std::string::npos);
  }
  CHECK(rows == 12);
  CHECK(out.str().find("vtei,average,192063,1.500000,128.0420,96017,0.274707,2.6671,5.3341") !=
        std::string::npos);
}

TEST_CASE("json report nests scenarios and keeps raw latency samples") {
  std::istringstream counts(testsupport::published_counts_csv());
  const BenchSummary summary = replay_from_counts(counts, kGen1, 5, 50000);
  std::ostringstream out;
  write_report_json(summary, out);
  const auto root = nlohmann::json::parse(out.str());
  CHECK(root["window_us"] == 50000);
  CHECK(root["bins"] == 5);
  REQUIRE(root["scenarios"].contains("average"));
  const auto& vtei = root["scenarios"]["average"]["vtei"];
  CHECK(vtei["non_zeros"] == 96017);
  CHECK(vtei["latency_samples_ms"].size() == 1);
  CHECK(vtei["compression_ratio"].get<double>() == doctest::Approx(2.67).epsilon(0.01));
}
