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

#include "core/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "core/rng.hpp"

namespace evtcodec {

namespace {

constexpr char kEvb1Magic[4] = {'E', 'V', 'B', '1'};
constexpr char kEtn1Magic[4] = {'E', 'T', 'N', '1'};
constexpr char kEco1Magic[4] = {'E', 'C', 'O', '1'};

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

/// Bounds-checked little-endian cursor over a parsed file image.
class ByteReader {
 public:
  ByteReader(const std::vector<uint8_t>& bytes, std::string name)
      : bytes_(bytes), name_(std::move(name)) {}

  uint8_t u8() { return take(1)[0]; }
  uint16_t u16() {
    const uint8_t* p = take(2);
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
  }
  uint32_t u32() {
    const uint8_t* p = take(4);
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
  }
  uint64_t u64() {
    uint64_t v = 0;
    const uint8_t* p = take(8);
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
    return v;
  }
  const uint8_t* take(size_t n) {
    if (bytes_.size() - pos_ < n) {
      raise(Errc::parse, name_ + ": truncated at byte " + std::to_string(pos_));
    }
    const uint8_t* p = bytes_.data() + pos_;
    pos_ += n;
    return p;
  }
  void expect_magic(const char magic[4]) {
    const uint8_t* p = take(4);
    if (std::memcmp(p, magic, 4) != 0) {
      raise(Errc::parse, name_ + ": bad magic, expected " + std::string(magic, 4));
    }
  }
  void expect_end() const {
    if (pos_ != bytes_.size()) {
      raise(Errc::parse, name_ + ": " + std::to_string(bytes_.size() - pos_) +
                             " trailing bytes after payload");
    }
  }
  size_t remaining() const { return bytes_.size() - pos_; }
  const std::string& name() const { return name_; }

 private:
  const std::vector<uint8_t>& bytes_;
  std::string name_;
  size_t pos_ = 0;
};

std::vector<uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io, "cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) raise(Errc::io, "read failure on " + path);
  return bytes;
}

void write_file_bytes(const std::string& path, const std::vector<uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(Errc::io, "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(Errc::io, "write failure on " + path);
}

template <typename T>
T parse_int(std::string_view field, const std::string& context) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    raise(Errc::parse, context + ": malformed integer field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

EventStream read_events_csv(std::istream& in, SensorGeometry geometry,
                            const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) raise(Errc::parse, name + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t_us,x,y,p") {
    raise(Errc::parse, name + ": line 1: expected header t_us,x,y,p");
  }

  std::vector<Event> events;
  uint64_t previous_t = 0;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string context = name + ": line " + std::to_string(line_no);

    std::array<std::string_view, 4> fields;
    size_t start = 0;
    for (int f = 0; f < 4; ++f) {
      const size_t comma = line.find(',', start);
      if (f < 3) {
        if (comma == std::string::npos) raise(Errc::parse, context + ": expected 4 fields");
        fields[f] = std::string_view(line).substr(start, comma - start);
        start = comma + 1;
      } else {
        if (comma != std::string::npos) raise(Errc::parse, context + ": expected 4 fields");
        fields[f] = std::string_view(line).substr(start);
      }
    }

    Event e;
    e.t = parse_int<uint64_t>(fields[0], context);
    e.x = parse_int<uint16_t>(fields[1], context);
    e.y = parse_int<uint16_t>(fields[2], context);
    const int polarity = parse_int<int>(fields[3], context);
    if (polarity != -1 && polarity != 0 && polarity != 1) {
      raise(Errc::parse, context + ": polarity must be -1, 0 or 1");
    }
    e.p = (polarity == 1) ? int8_t{1} : int8_t{-1};  // 0/1 convention: 0 -> -1

    if (!events.empty() && e.t < previous_t) {
      raise(Errc::parse, context + ": timestamps must be non-decreasing");
    }
    if (e.x >= geometry.width || e.y >= geometry.height) {
      raise(Errc::parse, context + ": coordinates outside sensor geometry");
    }
    previous_t = e.t;
    events.push_back(e);
  }
  return EventStream(geometry, std::move(events));
}

void write_events_csv(const EventStream& stream, std::ostream& out) {
  out << "t_us,x,y,p\n";
  for (const Event& e : stream.events()) {
    out << e.t << ',' << e.x << ',' << e.y << ',' << static_cast<int>(e.p) << '\n';
  }
}

EventStream read_events_evb1(std::istream& in, const std::string& name) {
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  ByteReader reader(bytes, name);
  reader.expect_magic(kEvb1Magic);
  SensorGeometry geometry{reader.u16(), reader.u16()};
  const uint64_t count = reader.u64();
  if (reader.remaining() != count * 16) {
    raise(Errc::parse, name + ": payload length does not match event count");
  }

  std::vector<Event> events;
  events.reserve(count);
  uint64_t previous_t = 0;
  for (uint64_t i = 0; i < count; ++i) {
    const std::string context = name + ": event " + std::to_string(i);
    Event e;
    e.t = reader.u64();
    e.x = reader.u16();
    e.y = reader.u16();
    const auto p = static_cast<int8_t>(reader.u8());
    const uint8_t* pad = reader.take(3);
    if (pad[0] != 0 || pad[1] != 0 || pad[2] != 0) {
      raise(Errc::parse, context + ": non-zero padding");
    }
    if (p != 1 && p != -1) raise(Errc::parse, context + ": polarity must be +1 or -1");
    e.p = p;
    if (i > 0 && e.t < previous_t) {
      raise(Errc::parse, context + ": timestamps must be non-decreasing");
    }
    if (e.x >= geometry.width || e.y >= geometry.height) {
      raise(Errc::parse, context + ": coordinates outside sensor geometry");
    }
    previous_t = e.t;
    events.push_back(e);
  }
  reader.expect_end();
  return EventStream(geometry, std::move(events));
}

void write_events_evb1(const EventStream& stream, std::ostream& out) {
  std::vector<uint8_t> bytes;
  bytes.reserve(16 + 16 * stream.size());
  bytes.insert(bytes.end(), kEvb1Magic, kEvb1Magic + 4);
  put_u16(bytes, stream.geometry().width);
  put_u16(bytes, stream.geometry().height);
  put_u64(bytes, stream.size());
  for (const Event& e : stream.events()) {
    put_u64(bytes, e.t);
    put_u16(bytes, e.x);
    put_u16(bytes, e.y);
    bytes.push_back(static_cast<uint8_t>(e.p));
    bytes.insert(bytes.end(), {0, 0, 0});
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

EventStream read_events(const std::string& path, std::optional<EventFileFormat> format_hint,
                        std::optional<SensorGeometry> csv_geometry) {
  const std::vector<uint8_t> bytes = read_file_bytes(path);
  EventFileFormat format;
  if (format_hint) {
    format = *format_hint;
  } else {
    format = (bytes.size() >= 4 && std::memcmp(bytes.data(), kEvb1Magic, 4) == 0)
                 ? EventFileFormat::Evb1
                 : EventFileFormat::Csv;
  }
  std::istringstream in(std::string(bytes.begin(), bytes.end()), std::ios::binary);
  if (format == EventFileFormat::Evb1) return read_events_evb1(in, path);
  if (!csv_geometry) {
    raise(Errc::invalid_argument, path + ": CSV input needs an explicit sensor geometry");
  }
  return read_events_csv(in, *csv_geometry, path);
}

void write_events(const EventStream& stream, const std::string& path, EventFileFormat format) {
  std::ostringstream out(std::ios::binary);
  if (format == EventFileFormat::Evb1) {
    write_events_evb1(stream, out);
  } else {
    write_events_csv(stream, out);
  }
  const std::string s = out.str();
  write_file_bytes(path, std::vector<uint8_t>(s.begin(), s.end()));
}

DenseTensor read_tensor_etn1(std::istream& in, const std::string& name) {
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  ByteReader reader(bytes, name);
  reader.expect_magic(kEtn1Magic);
  const uint8_t dtype_code = reader.u8();
  const uint8_t format_code = reader.u8();
  const uint8_t ndim = reader.u8();
  if (dtype_code > 2) raise(Errc::parse, name + ": unknown dtype code");
  if (format_code > 3) raise(Errc::parse, name + ": unknown format code");
  if (ndim != 3) raise(Errc::parse, name + ": tensors must have 3 dims");
  std::array<uint32_t, 3> dims{};
  for (uint32_t& d : dims) d = reader.u32();
  TimeWindow window;
  window.t_start = reader.u64();
  window.t_end = reader.u64();
  SensorGeometry geometry{reader.u16(), reader.u16()};

  const auto format = static_cast<Format>(format_code);
  if (static_cast<Dtype>(dtype_code) != dtype_for(format)) {
    raise(Errc::parse, name + ": dtype does not match format");
  }
  const bool split = (format == Format::Shist || format == Format::Voxel);
  if (split && dims[0] % 2 != 0) {
    raise(Errc::parse, name + ": channel count must be even for polarity-split formats");
  }
  window.bins = split ? dims[0] / 2 : dims[0];

  const size_t cells = static_cast<size_t>(dims[0]) * dims[1] * dims[2];
  const size_t payload = cells * dtype_size(static_cast<Dtype>(dtype_code));
  if (reader.remaining() != payload) {
    raise(Errc::parse, name + ": payload length does not match dims");
  }

  std::variant<std::vector<int8_t>, std::vector<uint8_t>, std::vector<float>> data;
  switch (static_cast<Dtype>(dtype_code)) {
    case Dtype::TernaryI8: {
      const uint8_t* p = reader.take(cells);
      data = std::vector<int8_t>(reinterpret_cast<const int8_t*>(p),
                                 reinterpret_cast<const int8_t*>(p) + cells);
      break;
    }
    case Dtype::CountU8: {
      const uint8_t* p = reader.take(cells);
      data = std::vector<uint8_t>(p, p + cells);
      break;
    }
    case Dtype::F32: {
      std::vector<float> values(cells);
      for (size_t i = 0; i < cells; ++i) values[i] = std::bit_cast<float>(reader.u32());
      data = std::move(values);
      break;
    }
  }
  reader.expect_end();
  try {
    return DenseTensor(format, window, geometry, dims, std::move(data));
  } catch (const Error& e) {
    raise(Errc::parse, name + ": " + e.what());
  }
}

void write_tensor_etn1(const DenseTensor& tensor, std::ostream& out) {
  std::vector<uint8_t> bytes;
  bytes.reserve(39 + tensor.byte_size());
  bytes.insert(bytes.end(), kEtn1Magic, kEtn1Magic + 4);
  bytes.push_back(static_cast<uint8_t>(tensor.dtype()));
  bytes.push_back(static_cast<uint8_t>(tensor.format()));
  bytes.push_back(3);
  for (uint32_t d : tensor.dims()) put_u32(bytes, d);
  put_u64(bytes, tensor.window().t_start);
  put_u64(bytes, tensor.window().t_end);
  put_u16(bytes, tensor.geometry().width);
  put_u16(bytes, tensor.geometry().height);
  switch (tensor.dtype()) {
    case Dtype::TernaryI8:
      for (int8_t v : tensor.i8()) bytes.push_back(static_cast<uint8_t>(v));
      break;
    case Dtype::CountU8:
      bytes.insert(bytes.end(), tensor.u8().begin(), tensor.u8().end());
      break;
    case Dtype::F32:
      for (float v : tensor.f32()) put_u32(bytes, std::bit_cast<uint32_t>(v));
      break;
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

DenseTensor read_tensor(const std::string& path) {
  const std::vector<uint8_t> bytes = read_file_bytes(path);
  std::istringstream in(std::string(bytes.begin(), bytes.end()), std::ios::binary);
  return read_tensor_etn1(in, path);
}

void write_tensor(const DenseTensor& tensor, const std::string& path) {
  std::ostringstream out(std::ios::binary);
  write_tensor_etn1(tensor, out);
  const std::string s = out.str();
  write_file_bytes(path, std::vector<uint8_t>(s.begin(), s.end()));
}

CooBuffer read_coo_eco1(std::istream& in, const std::string& name) {
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  ByteReader reader(bytes, name);
  reader.expect_magic(kEco1Magic);
  const uint8_t format_code = reader.u8();
  if (format_code > 3) raise(Errc::parse, name + ": unknown format code");
  SensorGeometry geometry{reader.u16(), reader.u16()};
  const uint8_t bins = reader.u8();
  TimeWindow window;
  window.t_start = reader.u64();
  window.t_end = reader.u64();
  window.bins = bins;
  const uint64_t record_count = reader.u64();

  try {
    const CooLayout layout = layout_for(static_cast<Format>(format_code), geometry, bins);
    if (reader.remaining() != record_count * layout.record_bytes) {
      raise(Errc::parse, name + ": payload length does not match record count");
    }
    const uint8_t* payload = reader.take(record_count * layout.record_bytes);
    reader.expect_end();
    return CooBuffer(static_cast<Format>(format_code), geometry, window, record_count,
                     std::vector<uint8_t>(payload, payload + record_count * layout.record_bytes));
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    raise(Errc::parse, name + ": " + e.what());
  }
}

void write_coo_eco1(const CooBuffer& buffer, std::ostream& out) {
  if (buffer.window().bins > 255) {
    raise(Errc::unsupported, "ECO1 framing stores the bin count in one byte");
  }
  std::vector<uint8_t> bytes;
  bytes.reserve(34 + buffer.bytes().size());
  bytes.insert(bytes.end(), kEco1Magic, kEco1Magic + 4);
  bytes.push_back(static_cast<uint8_t>(buffer.format()));
  put_u16(bytes, buffer.geometry().width);
  put_u16(bytes, buffer.geometry().height);
  bytes.push_back(static_cast<uint8_t>(buffer.window().bins));
  put_u64(bytes, buffer.window().t_start);
  put_u64(bytes, buffer.window().t_end);
  put_u64(bytes, buffer.record_count());
  bytes.insert(bytes.end(), buffer.bytes().begin(), buffer.bytes().end());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

CooBuffer read_coo(const std::string& path) {
  const std::vector<uint8_t> bytes = read_file_bytes(path);
  std::istringstream in(std::string(bytes.begin(), bytes.end()), std::ios::binary);
  return read_coo_eco1(in, path);
}

void write_coo(const CooBuffer& buffer, const std::string& path) {
  std::ostringstream out(std::ios::binary);
  write_coo_eco1(buffer, out);
  const std::string s = out.str();
  write_file_bytes(path, std::vector<uint8_t>(s.begin(), s.end()));
}

void write_pgm(const DenseTensor& tensor, uint32_t channel, std::ostream& out) {
  if (channel >= tensor.channels()) {
    raise(Errc::invalid_argument, "channel index outside tensor");
  }
  out << "P5\n" << tensor.width() << ' ' << tensor.height() << "\n255\n";
  const size_t base = tensor.index(channel, 0, 0);
  const size_t plane = static_cast<size_t>(tensor.height()) * tensor.width();
  std::vector<uint8_t> pixels(plane);
  switch (tensor.dtype()) {
    case Dtype::TernaryI8: {
      auto data = tensor.i8();
      for (size_t i = 0; i < plane; ++i) {
        const int8_t v = data[base + i];
        pixels[i] = (v < 0) ? 0 : (v > 0) ? 255 : 128;
      }
      break;
    }
    case Dtype::CountU8: {
      auto data = tensor.u8();
      std::copy(data.begin() + base, data.begin() + base + plane, pixels.begin());
      break;
    }
    case Dtype::F32: {
      auto data = tensor.f32();
      float max_value = 0.0f;
      for (float v : data) max_value = std::max(max_value, v);
      for (size_t i = 0; i < plane; ++i) {
        pixels[i] = max_value == 0.0f
                        ? 0
                        : static_cast<uint8_t>(std::lround(data[base + i] / max_value * 255.0f));
      }
      break;
    }
  }
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
}

void write_pgm(const DenseTensor& tensor, uint32_t channel, const std::string& path) {
  std::ostringstream out(std::ios::binary);
  write_pgm(tensor, channel, out);
  const std::string s = out.str();
  write_file_bytes(path, std::vector<uint8_t>(s.begin(), s.end()));
}

SynthPattern synth_pattern_from_name(std::string_view name) {
  if (name == "moving-bar") return SynthPattern::MovingBar;
  if (name == "moving-dot") return SynthPattern::MovingDot;
  if (name == "static-noise") return SynthPattern::StaticNoise;
  raise(Errc::invalid_argument, "unknown pattern: " + std::string(name));
}

EventStream synth_events(SensorGeometry geometry, uint64_t duration_us, SynthPattern pattern,
                         double contrast, uint64_t seed, uint64_t tick_us) {
  if (geometry.width < 1 || geometry.height < 1) {
    raise(Errc::invalid_argument, "sensor geometry must be at least 1x1");
  }
  if (duration_us == 0) raise(Errc::invalid_argument, "duration must be positive");
  if (tick_us == 0) raise(Errc::invalid_argument, "tick must be positive");
  if (!(contrast > 0.0)) {
    raise(Errc::invalid_argument, "contrast threshold must be positive");
  }

  const uint32_t width = geometry.width;
  const uint32_t height = geometry.height;
  const size_t pixels = static_cast<size_t>(width) * height;
  std::mt19937_64 rng(seed);

  std::vector<double> field(pixels);
  const auto evaluate = [&](uint64_t t_us) {
    const double phase = static_cast<double>(t_us) / static_cast<double>(duration_us);
    switch (pattern) {
      case SynthPattern::MovingBar: {
        const double center = phase * (width - 1);
        const double half_width = std::max(1.0, width / 16.0);
        for (uint32_t y = 0; y < height; ++y) {
          for (uint32_t x = 0; x < width; ++x) {
            field[static_cast<size_t>(y) * width + x] =
                (std::abs(x - center) <= half_width) ? 1.0 : 0.0;
          }
        }
        break;
      }
      case SynthPattern::MovingDot: {
        constexpr double tau = 2.0 * std::numbers::pi;
        const double cx = (width - 1) * (0.5 + 0.33 * std::sin(tau * phase));
        const double cy = (height - 1) * (0.5 + 0.33 * std::sin(2.0 * tau * phase + 1.0));
        const double sigma = std::max(1.5, std::min(width, height) / 12.0);
        const double inv = 1.0 / (2.0 * sigma * sigma);
        for (uint32_t y = 0; y < height; ++y) {
          for (uint32_t x = 0; x < width; ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            field[static_cast<size_t>(y) * width + x] = std::exp(-(dx * dx + dy * dy) * inv);
          }
        }
        break;
      }
      case SynthPattern::StaticNoise: {
        for (double& v : field) v = uniform01(rng);
        break;
      }
    }
  };

  evaluate(0);
  std::vector<double> reference = field;
  std::vector<Event> events;

  const uint64_t ticks = duration_us / tick_us;
  for (uint64_t k = 1; k <= ticks; ++k) {
    const uint64_t t = k * tick_us;
    evaluate(t);
    for (uint32_t y = 0; y < height; ++y) {
      for (uint32_t x = 0; x < width; ++x) {
        const size_t i = static_cast<size_t>(y) * width + x;
        const double delta = field[i] - reference[i];
        if (std::abs(delta) >= contrast) {
          events.push_back(Event{t, static_cast<uint16_t>(x), static_cast<uint16_t>(y),
                                 delta > 0 ? int8_t{1} : int8_t{-1}});
          reference[i] = field[i];
        }
      }
    }
  }
  return EventStream(geometry, std::move(events));
}

}  // namespace evtcodec
