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

#include "core/rng.hpp"
#include "test_support.hpp"

using namespace evtcodec;

namespace {

EventStream stream_of(SensorGeometry g, std::vector<Event> events) {
  return EventStream(g, std::move(events));
}

}  // namespace

TEST_CASE("assign_bin maps uniform intervals") {
  const TimeWindow window{0, 50000, 5};
  CHECK(assign_bin(0, window) == 0);
  CHECK(assign_bin(10000, window) == 1);
  CHECK(assign_bin(9999, window) == 0);
  CHECK(assign_bin(49999, window) == 4);
}

TEST_CASE("assign_bin closes the final bin at the right endpoint") {
  const TimeWindow window{0, 50000, 5};
  CHECK(assign_bin(50000, window) == 4);
  CHECK(assign_bin(1, TimeWindow{0, 1, 1}) == 0);
}

TEST_CASE("assign_bin rejects timestamps outside the window") {
  const TimeWindow window{1000, 2000, 4};
  CHECK_THROWS_WITH_AS(assign_bin(999, window), doctest::Contains("outside window"), Error);
  CHECK_THROWS_AS(assign_bin(2001, window), Error);
  try {
    assign_bin(999, window);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::out_of_window);
  }
}

TEST_CASE("assign_bin is monotone in t") {
  std::mt19937_64 rng(11);
  const TimeWindow window{500, 91723, 7};
  uint32_t previous = 0;
  for (uint64_t t = window.t_start; t <= window.t_end; t += 1 + uniform_index(rng, 97)) {
    const uint32_t bin = assign_bin(t, window);
    CHECK(bin >= previous);
    previous = bin;
  }
}

TEST_CASE("assign_bin spreads uniform samples evenly (chi-square)") {
  // df = 4 at p = 0.01 -> 13.2767
  std::mt19937_64 rng(2026);
  const TimeWindow window{0, 50000, 5};
  std::array<uint64_t, 5> counts{};
  constexpr size_t kSamples = 1000000;
  for (size_t i = 0; i < kSamples; ++i) {
    const uint64_t t = uniform_index(rng, window.t_end);  // [t_start, t_end)
    ++counts[assign_bin(t, window)];
  }
  const double expected = kSamples / 5.0;
  double chi2 = 0.0;
  for (uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 13.2767);
}

TEST_CASE("chunk_stream splits on half-open window boundaries") {
  const SensorGeometry g{4, 4};
  const auto chunks = chunk_stream(
      stream_of(g, {{0, 0, 0, 1}, {49999, 1, 1, -1}, {50000, 2, 2, 1}}), 50000, 5);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[0].events.size() == 2);
  CHECK(chunks[0].window == TimeWindow{0, 50000, 5});
  CHECK(chunks[1].events.size() == 1);
  CHECK(chunks[1].events.events()[0].t == 50000);
  CHECK(chunks[1].window == TimeWindow{50000, 100000, 5});
}

TEST_CASE("chunk_stream edge cases") {
  const SensorGeometry g{4, 4};
  CHECK(chunk_stream(stream_of(g, {}), 50000, 5).empty());

  const auto single = chunk_stream(
      stream_of(g, {{0, 0, 0, 1}, {0, 1, 0, 1}, {0, 2, 0, -1}}), 50000, 5);
  REQUIRE(single.size() == 1);
  CHECK(single[0].events.size() == 3);

  // Anchoring at the first event, not at zero.
  const auto anchored = chunk_stream(stream_of(g, {{70000, 0, 0, 1}}), 50000, 1);
  REQUIRE(anchored.size() == 1);
  CHECK(anchored[0].window.t_start == 70000);

  CHECK_THROWS_AS(chunk_stream(stream_of(g, {}), 0, 5), Error);
}

TEST_CASE("chunk_stream emits empty chunks for gaps") {
  const SensorGeometry g{4, 4};
  const auto chunks = chunk_stream(stream_of(g, {{0, 0, 0, 1}, {120000, 1, 1, -1}}), 50000, 5);
  REQUIRE(chunks.size() == 3);
  CHECK(chunks[0].events.size() == 1);
  CHECK(chunks[1].events.empty());
  CHECK(chunks[1].window == TimeWindow{50000, 100000, 5});
  CHECK(chunks[2].events.size() == 1);
}

TEST_CASE("chunk_stream concatenation reproduces the input") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 25; ++round) {
    const auto [stream, window] = testsupport::random_chunk(rng, 16, 16, 2000, 5);
    const auto chunks = chunk_stream(stream, 1 + uniform_index(rng, 20000), 5);
    std::vector<Event> merged;
    for (const Chunk& chunk : chunks) {
      merged.insert(merged.end(), chunk.events.events().begin(), chunk.events.events().end());
    }
    CHECK(merged == stream.events());
  }
}

TEST_CASE("EventStream validates its invariants") {
  const SensorGeometry g{4, 4};
  CHECK_THROWS_AS(stream_of({0, 4}, {}), Error);                       // degenerate geometry
  CHECK_THROWS_AS(stream_of(g, {{5, 0, 0, 1}, {4, 0, 0, 1}}), Error);  // t out of order
  CHECK_THROWS_AS(stream_of(g, {{0, 0, 0, 0}}), Error);                // zero polarity
  CHECK_THROWS_AS(stream_of(g, {{0, 4, 0, 1}}), Error);                // x outside
  CHECK_THROWS_AS(stream_of(g, {{0, 0, 4, 1}}), Error);                // y outside
  CHECK(stream_of(g, {{0, 3, 3, -1}}).size() == 1);
}
