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

#include "core/coo.hpp"
#include "core/half.hpp"
#include "test_support.hpp"

using namespace evtcodec;

namespace {

constexpr SensorGeometry kGen1{304, 240};

DenseTensor half_rounded(const DenseTensor& tensor) {
  DenseTensor out = tensor;
  for (float& v : out.f32()) {
    if (v != 0.0f) v = half_to_float(float_to_half(v));
  }
  return out;
}

}  // namespace

TEST_CASE("layout_for reproduces the per-format byte model at GEN1 geometry") {
  const CooLayout vtei = layout_for(Format::Vtei, kGen1, 5);
  CHECK(vtei.x_bits == 9);
  CHECK(vtei.y_bits == 8);
  CHECK(vtei.bin_bits == 3);
  CHECK(vtei.channel_bits == 0);
  CHECK(vtei.data_bits == 1);
  CHECK(vtei.record_bytes == 3);

  CHECK(layout_for(Format::Shist, kGen1, 5).record_bytes == 4);
  CHECK(layout_for(Format::Mdes, kGen1, 5).record_bytes == 3);
  CHECK(layout_for(Format::Voxel, kGen1, 5).record_bytes == 5);
}

TEST_CASE("layout_for generalizes through ceil-log2") {
  const CooLayout tiny = layout_for(Format::Vtei, {2, 2}, 1);
  CHECK(tiny.total_bits() == 3);  // 1 + 1 + 0 + 0 + 1
  CHECK(tiny.record_bytes == 1);

  const CooLayout one = layout_for(Format::Vtei, {1, 1}, 1);
  CHECK(one.total_bits() == 1);

  CHECK(layout_for(Format::Voxel, {3840, 2160}, 16).total_bits() == 45);
  CHECK_THROWS_AS(layout_for(Format::Vtei, {0, 1}, 1), Error);
}

TEST_CASE("golden record layout: x=5 y=3 bin=2 +1 at GEN1") {
  DenseTensor tensor(Format::Vtei, {0, 50000, 5}, kGen1);
  tensor.i8()[tensor.index(2, 3, 5)] = 1;

  const CooBuffer coo = coo_encode(tensor);
  CHECK(coo.record_count() == 1);
  CHECK(coo.bytes() == std::vector<uint8_t>{0x05, 0x06, 0x14});

  // Independent bit-level assembly of the same record.
  const auto oracle = testsupport::bitpack_oracle({{5, 9}, {3, 8}, {2, 3}, {1, 1}}, 3);
  CHECK(coo.bytes() == oracle);

  const DenseTensor decoded = coo_decode(coo);
  CHECK(decoded == tensor);
}

TEST_CASE("all-zero tensors encode to empty buffers") {
  const CooBuffer coo = coo_encode(DenseTensor(Format::Shist, {0, 50000, 5}, {16, 16}));
  CHECK(coo.record_count() == 0);
  CHECK(coo.bytes().empty());
  CHECK(count_nonzeros(coo_decode(coo)) == 0);
}

TEST_CASE("encoded byte length is non_zeros * record_bytes") {
  std::mt19937_64 rng(42);
  for (Format format : {Format::Vtei, Format::Shist, Format::Mdes, Format::Voxel}) {
    for (int round = 0; round < 10; ++round) {
      const auto tensor = testsupport::random_tensor(rng, format, 16, 16, 5);
      const CooBuffer coo = coo_encode(tensor);
      CHECK(coo.record_count() == count_nonzeros(tensor));
      CHECK(coo.bytes().size() == coo.record_count() * coo.layout().record_bytes);
    }
  }
}

TEST_CASE("coo roundtrip is lossless for ternary and count tensors") {
  std::mt19937_64 rng(43);
  for (Format format : {Format::Vtei, Format::Mdes, Format::Shist}) {
    for (int round = 0; round < 25; ++round) {
      const auto tensor = testsupport::random_tensor(rng, format, 16, 16, 1 + round % 5);
      CHECK(coo_decode(coo_encode(tensor)) == tensor);
    }
  }
}

TEST_CASE("coo roundtrip is half-precision-exact for voxel tensors") {
  std::mt19937_64 rng(44);
  for (int round = 0; round < 25; ++round) {
    const auto tensor = testsupport::random_tensor(rng, Format::Voxel, 16, 16, 2 + round % 4);
    const DenseTensor decoded = coo_decode(coo_encode(tensor));
    CHECK(decoded == half_rounded(tensor));
    // A second trip is bit-stable.
    CHECK(coo_decode(coo_encode(decoded)) == decoded);
  }
}

TEST_CASE("equal tensors give byte-identical buffers") {
  std::mt19937_64 rng(45);
  const auto tensor = testsupport::random_tensor(rng, Format::Vtei, 16, 16, 5);
  const DenseTensor copy = tensor;
  CHECK(coo_encode(tensor).bytes() == coo_encode(copy).bytes());
}

TEST_CASE("coo_encode rejects non-ternary cells") {
  DenseTensor tensor(Format::Vtei, {0, 50000, 5}, {16, 16});
  tensor.i8()[3] = 7;
  CHECK_THROWS_AS(coo_encode(tensor), Error);
  try {
    coo_encode(tensor);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::codec);
  }
}

TEST_CASE("coo_decode rejects malformed buffers") {
  const TimeWindow window{0, 50000, 5};

  // x = 304 is representable in 9 bits but outside the 304-wide sensor.
  {
    const uint64_t record = 304ull | (3ull << 9) | (2ull << 17) | (1ull << 20);
    std::vector<uint8_t> bytes{static_cast<uint8_t>(record), static_cast<uint8_t>(record >> 8),
                               static_cast<uint8_t>(record >> 16)};
    const CooBuffer bad(Format::Vtei, kGen1, window, 1, std::move(bytes));
    CHECK_THROWS_WITH_AS(coo_decode(bad), doctest::Contains("outside dims"), Error);
  }
  // bin = 6 >= B = 5.
  {
    const uint64_t record = 5ull | (3ull << 9) | (6ull << 17) | (1ull << 20);
    std::vector<uint8_t> bytes{static_cast<uint8_t>(record), static_cast<uint8_t>(record >> 8),
                               static_cast<uint8_t>(record >> 16)};
    const CooBuffer bad(Format::Vtei, kGen1, window, 1, std::move(bytes));
    CHECK_THROWS_AS(coo_decode(bad), Error);
  }
  // Non-zero padding above the 21 used bits.
  {
    const uint64_t record = (5ull | (3ull << 9) | (2ull << 17) | (1ull << 20)) | (1ull << 22);
    std::vector<uint8_t> bytes{static_cast<uint8_t>(record), static_cast<uint8_t>(record >> 8),
                               static_cast<uint8_t>(record >> 16)};
    const CooBuffer bad(Format::Vtei, kGen1, window, 1, std::move(bytes));
    CHECK_THROWS_WITH_AS(coo_decode(bad), doctest::Contains("padding"), Error);
  }
  // Duplicate records are not strictly ascending.
  {
    const uint64_t record = 5ull | (3ull << 9) | (2ull << 17) | (1ull << 20);
    std::vector<uint8_t> bytes;
    for (int i = 0; i < 2; ++i) {
      bytes.push_back(static_cast<uint8_t>(record));
      bytes.push_back(static_cast<uint8_t>(record >> 8));
      bytes.push_back(static_cast<uint8_t>(record >> 16));
    }
    const CooBuffer bad(Format::Vtei, kGen1, window, 2, std::move(bytes));
    CHECK_THROWS_WITH_AS(coo_decode(bad), doctest::Contains("ascending"), Error);
  }
  // SHist count payload of zero.
  {
    const uint64_t record = 5ull | (3ull << 9) | (2ull << 17) | (0ull << 20) | (0ull << 21);
    std::vector<uint8_t> bytes{static_cast<uint8_t>(record), static_cast<uint8_t>(record >> 8),
                               static_cast<uint8_t>(record >> 16),
                               static_cast<uint8_t>(record >> 24)};
    const CooBuffer bad(Format::Shist, kGen1, window, 1, std::move(bytes));
    CHECK_THROWS_WITH_AS(coo_decode(bad), doctest::Contains("zero count"), Error);
  }
  // Buffer length inconsistent with the record count.
  CHECK_THROWS_AS(CooBuffer(Format::Vtei, kGen1, window, 2, std::vector<uint8_t>(3)), Error);
}

TEST_CASE("shist records decode their full count range") {
  DenseTensor tensor(Format::Shist, {0, 50000, 5}, {16, 16});
  tensor.u8()[tensor.index(7, 3, 2)] = 255;
  tensor.u8()[tensor.index(0, 0, 0)] = 1;
  const DenseTensor decoded = coo_decode(coo_encode(tensor));
  CHECK(decoded.u8()[decoded.index(7, 3, 2)] == 255);
  CHECK(decoded == tensor);
}

TEST_CASE("half conversion matches frozen IEEE vectors") {
  // value -> binary16 bits, round-to-nearest-even
  const std::pair<float, uint16_t> vectors[] = {
      {0.0f, 0x0000},       {1.0f, 0x3C00},
      {-1.0f, 0xBC00},      {0.5f, 0x3800},
      {2.0f, 0x4000},       {65504.0f, 0x7BFF},
      {65520.0f, 0x7C00},   {1e-8f, 0x0000},
      {5.960464477539063e-08f, 0x0001},
      {0.1f, 0x2E66},       {0.2f, 0x3266},
      {1.0009765625f, 0x3C01},
      {1.00048828125f, 0x3C00},  // tie rounds to even
      {2.9802322387695312e-08f, 0x0000},
      {8e-05f, 0x053E},     {1.5f, 0x3E00},
      {0.75f, 0x3A00},      {3.14159265f, 0x4248},
      {100000.0f, 0x7C00},  {6.103515625e-05f, 0x0400},
      {6.097555160522461e-05f, 0x03FF},
  };
  for (const auto& [value, bits] : vectors) {
    CHECK(float_to_half(value) == bits);
  }
  CHECK(half_to_float(0x3C00) == 1.0f);
  CHECK(half_to_float(0x0001) == 5.960464477539063e-08f);
  CHECK(half_to_float(0x03FF) == 6.097555160522461e-05f);
  CHECK(half_to_float(0x7BFF) == 65504.0f);
}

TEST_CASE("half bits survive a float32 roundtrip") {
  for (uint32_t bits = 0; bits < 0x8000u; ++bits) {
    const auto h = static_cast<uint16_t>(bits);
    if ((h & 0x7C00u) == 0x7C00u) continue;  // skip inf/nan
    CHECK(float_to_half(half_to_float(h)) == h);
  }
}
