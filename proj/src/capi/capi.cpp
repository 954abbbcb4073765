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

#include "evtcodec/evtcodec.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/augment.hpp"
#include "core/bench.hpp"
#include "core/coo.hpp"
#include "core/encoders.hpp"
#include "core/io.hpp"

struct evt_stream {
  evtcodec::EventStream impl;
};
struct evt_chunks {
  std::vector<evtcodec::Chunk> impl;
};
struct evt_tensor {
  evtcodec::DenseTensor impl;
};
struct evt_coo {
  evtcodec::CooBuffer impl;
};
struct evt_bench {
  evtcodec::BenchSummary impl;
};

namespace {

thread_local std::string t_last_error;

evt_status status_from(evtcodec::Errc code) {
  using evtcodec::Errc;
  switch (code) {
    case Errc::invalid_argument: return EVT_ERR_INVALID_ARGUMENT;
    case Errc::out_of_window: return EVT_ERR_OUT_OF_WINDOW;
    case Errc::bounds: return EVT_ERR_BOUNDS;
    case Errc::parse: return EVT_ERR_PARSE;
    case Errc::io: return EVT_ERR_IO;
    case Errc::codec: return EVT_ERR_CODEC;
    case Errc::corrupt: return EVT_ERR_CORRUPT;
    case Errc::unsupported: return EVT_ERR_UNSUPPORTED;
  }
  return EVT_ERR_INTERNAL;
}

template <typename Fn>
evt_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return EVT_OK;
  } catch (const evtcodec::Error& e) {
    t_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return EVT_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return EVT_ERR_INTERNAL;
  }
}

evt_status fail_invalid(const char* message) noexcept {
  t_last_error = message;
  return EVT_ERR_INVALID_ARGUMENT;
}

evtcodec::SensorGeometry to_core(evt_geometry g) { return {g.width, g.height}; }
evt_geometry from_core(const evtcodec::SensorGeometry& g) { return {g.width, g.height}; }
evtcodec::TimeWindow to_core(evt_window w) { return {w.t_start_us, w.t_end_us, w.bins}; }
evt_window from_core(const evtcodec::TimeWindow& w) { return {w.t_start, w.t_end, w.bins}; }

evtcodec::Format to_core(evt_format f) {
  if (f < EVT_FORMAT_VTEI || f > EVT_FORMAT_VOXEL) {
    evtcodec::raise(evtcodec::Errc::invalid_argument, "unknown format tag");
  }
  return static_cast<evtcodec::Format>(f);
}

std::optional<evtcodec::EventFileFormat> event_format_from_hint(const char* hint) {
  if (hint == nullptr) return std::nullopt;
  if (std::strcmp(hint, "csv") == 0) return evtcodec::EventFileFormat::Csv;
  if (std::strcmp(hint, "evb1") == 0) return evtcodec::EventFileFormat::Evb1;
  evtcodec::raise(evtcodec::Errc::invalid_argument,
                  "event file format must be \"csv\" or \"evb1\"");
}

evt_report report_from_core(const evtcodec::EncodingReport& r) {
  evt_report out{};
  out.format = static_cast<evt_format>(r.format);
  out.events = r.events;
  out.latency_seconds = r.latency_seconds;
  out.event_rate_mevs = r.event_rate_mevs;
  out.non_zeros = r.non_zeros;
  out.encoded_bytes = r.encoded_bytes;
  out.raw_bytes = r.raw_bytes;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.compression_ratio = r.compression_ratio.value_or(nan);
  out.bw_mbs = r.bandwidth_mbs.value_or(nan);
  return out;
}

}  // namespace

extern "C" {

const char* evt_version(void) { return "1.0.0"; }

const char* evt_last_error(void) { return t_last_error.c_str(); }

const char* evt_status_name(evt_status status) {
  switch (status) {
    case EVT_OK: return "ok";
    case EVT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case EVT_ERR_OUT_OF_WINDOW: return "out-of-window";
    case EVT_ERR_BOUNDS: return "bounds";
    case EVT_ERR_PARSE: return "parse";
    case EVT_ERR_IO: return "io";
    case EVT_ERR_CODEC: return "codec";
    case EVT_ERR_CORRUPT: return "corrupt";
    case EVT_ERR_UNSUPPORTED: return "unsupported";
    case EVT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

/* ---- event streams ------------------------------------------------- */

evt_status evt_stream_create(evt_geometry geometry, const evt_event* events, size_t count,
                             evt_stream** out) {
  if (out == nullptr || (events == nullptr && count > 0)) {
    return fail_invalid("evt_stream_create: null argument");
  }
  return guarded([&] {
    std::vector<evtcodec::Event> converted;
    converted.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      converted.push_back({events[i].t_us, events[i].x, events[i].y, events[i].p});
    }
    *out = new evt_stream{evtcodec::EventStream(to_core(geometry), std::move(converted))};
  });
}

void evt_stream_free(evt_stream* stream) { delete stream; }

size_t evt_stream_size(const evt_stream* stream) {
  return stream == nullptr ? 0 : stream->impl.size();
}

evt_status evt_stream_geometry(const evt_stream* stream, evt_geometry* out) {
  if (stream == nullptr || out == nullptr) return fail_invalid("evt_stream_geometry: null argument");
  *out = from_core(stream->impl.geometry());
  return EVT_OK;
}

evt_status evt_stream_copy_events(const evt_stream* stream, evt_event* out, size_t capacity) {
  if (stream == nullptr || (out == nullptr && stream->impl.size() > 0)) {
    return fail_invalid("evt_stream_copy_events: null argument");
  }
  if (capacity < stream->impl.size()) {
    t_last_error = "evt_stream_copy_events: capacity too small";
    return EVT_ERR_BOUNDS;
  }
  size_t i = 0;
  for (const evtcodec::Event& e : stream->impl.events()) {
    out[i++] = {e.t, e.x, e.y, e.p};
  }
  return EVT_OK;
}

evt_status evt_stream_read(const char* path, const char* format,
                           const evt_geometry* csv_geometry, evt_stream** out) {
  if (path == nullptr || out == nullptr) return fail_invalid("evt_stream_read: null argument");
  return guarded([&] {
    std::optional<evtcodec::SensorGeometry> geometry;
    if (csv_geometry != nullptr) geometry = to_core(*csv_geometry);
    *out = new evt_stream{
        evtcodec::read_events(path, event_format_from_hint(format), geometry)};
  });
}

evt_status evt_stream_write(const evt_stream* stream, const char* path, const char* format) {
  if (stream == nullptr || path == nullptr || format == nullptr) {
    return fail_invalid("evt_stream_write: null argument");
  }
  return guarded([&] {
    const auto file_format = event_format_from_hint(format);
    if (!file_format) {
      evtcodec::raise(evtcodec::Errc::invalid_argument, "format must be \"csv\" or \"evb1\"");
    }
    evtcodec::write_events(stream->impl, path, *file_format);
  });
}

evt_status evt_synth(evt_geometry geometry, uint64_t duration_us, const char* pattern,
                     double contrast, uint64_t seed, uint64_t tick_us, evt_stream** out) {
  if (pattern == nullptr || out == nullptr) return fail_invalid("evt_synth: null argument");
  return guarded([&] {
    *out = new evt_stream{evtcodec::synth_events(to_core(geometry), duration_us,
                                                 evtcodec::synth_pattern_from_name(pattern),
                                                 contrast, seed, tick_us)};
  });
}

/* ---- temporal binning and chunking ---------------------------------- */

evt_status evt_assign_bin(uint64_t t_us, evt_window window, uint32_t* out_bin) {
  if (out_bin == nullptr) return fail_invalid("evt_assign_bin: null argument");
  return guarded([&] { *out_bin = evtcodec::assign_bin(t_us, to_core(window)); });
}

evt_status evt_chunk_stream(const evt_stream* stream, uint64_t window_len_us, uint32_t bins,
                            evt_chunks** out) {
  if (stream == nullptr || out == nullptr) return fail_invalid("evt_chunk_stream: null argument");
  return guarded([&] {
    *out = new evt_chunks{evtcodec::chunk_stream(stream->impl, window_len_us, bins)};
  });
}

void evt_chunks_free(evt_chunks* chunks) { delete chunks; }

size_t evt_chunks_size(const evt_chunks* chunks) {
  return chunks == nullptr ? 0 : chunks->impl.size();
}

evt_status evt_chunks_get(const evt_chunks* chunks, size_t index, evt_stream** out_events,
                          evt_window* out_window) {
  if (chunks == nullptr) return fail_invalid("evt_chunks_get: null argument");
  if (index >= chunks->impl.size()) {
    t_last_error = "evt_chunks_get: index outside chunk list";
    return EVT_ERR_BOUNDS;
  }
  if (out_events != nullptr) *out_events = new evt_stream{chunks->impl[index].events};
  if (out_window != nullptr) *out_window = from_core(chunks->impl[index].window);
  return EVT_OK;
}

/* ---- encoders and tensors ------------------------------------------- */

evt_status evt_encode(const evt_stream* chunk, evt_window window, evt_format format,
                      evt_tensor** out) {
  if (chunk == nullptr || out == nullptr) return fail_invalid("evt_encode: null argument");
  return guarded([&] {
    *out = new evt_tensor{evtcodec::encode(chunk->impl, to_core(window), to_core(format))};
  });
}

void evt_tensor_free(evt_tensor* tensor) { delete tensor; }

evt_status evt_tensor_format(const evt_tensor* tensor, evt_format* out) {
  if (tensor == nullptr || out == nullptr) return fail_invalid("evt_tensor_format: null argument");
  *out = static_cast<evt_format>(tensor->impl.format());
  return EVT_OK;
}

evt_status evt_tensor_dtype(const evt_tensor* tensor, evt_dtype* out) {
  if (tensor == nullptr || out == nullptr) return fail_invalid("evt_tensor_dtype: null argument");
  *out = static_cast<evt_dtype>(tensor->impl.dtype());
  return EVT_OK;
}

evt_status evt_tensor_window(const evt_tensor* tensor, evt_window* out) {
  if (tensor == nullptr || out == nullptr) return fail_invalid("evt_tensor_window: null argument");
  *out = from_core(tensor->impl.window());
  return EVT_OK;
}

evt_status evt_tensor_geometry(const evt_tensor* tensor, evt_geometry* out) {
  if (tensor == nullptr || out == nullptr) {
    return fail_invalid("evt_tensor_geometry: null argument");
  }
  *out = from_core(tensor->impl.geometry());
  return EVT_OK;
}

evt_status evt_tensor_dims(const evt_tensor* tensor, uint32_t out_dims[3]) {
  if (tensor == nullptr || out_dims == nullptr) return fail_invalid("evt_tensor_dims: null argument");
  const auto& dims = tensor->impl.dims();
  out_dims[0] = dims[0];
  out_dims[1] = dims[1];
  out_dims[2] = dims[2];
  return EVT_OK;
}

evt_status evt_tensor_data(const evt_tensor* tensor, const void** out_data, size_t* out_bytes) {
  if (tensor == nullptr || out_data == nullptr || out_bytes == nullptr) {
    return fail_invalid("evt_tensor_data: null argument");
  }
  switch (tensor->impl.dtype()) {
    case evtcodec::Dtype::TernaryI8: *out_data = tensor->impl.i8().data(); break;
    case evtcodec::Dtype::CountU8: *out_data = tensor->impl.u8().data(); break;
    case evtcodec::Dtype::F32: *out_data = tensor->impl.f32().data(); break;
  }
  *out_bytes = tensor->impl.byte_size();
  return EVT_OK;
}

evt_status evt_tensor_nonzeros(const evt_tensor* tensor, uint64_t* out) {
  if (tensor == nullptr || out == nullptr) return fail_invalid("evt_tensor_nonzeros: null argument");
  return guarded([&] { *out = evtcodec::count_nonzeros(tensor->impl); });
}

evt_status evt_tensor_read(const char* path, evt_tensor** out) {
  if (path == nullptr || out == nullptr) return fail_invalid("evt_tensor_read: null argument");
  return guarded([&] { *out = new evt_tensor{evtcodec::read_tensor(path)}; });
}

evt_status evt_tensor_write(const evt_tensor* tensor, const char* path) {
  if (tensor == nullptr || path == nullptr) return fail_invalid("evt_tensor_write: null argument");
  return guarded([&] { evtcodec::write_tensor(tensor->impl, path); });
}

evt_status evt_tensor_write_pgm(const evt_tensor* tensor, uint32_t channel, const char* path) {
  if (tensor == nullptr || path == nullptr) {
    return fail_invalid("evt_tensor_write_pgm: null argument");
  }
  return guarded([&] { evtcodec::write_pgm(tensor->impl, channel, std::string(path)); });
}

/* ---- sparse COO codec ------------------------------------------------ */

evt_status evt_coo_layout_for(evt_format format, evt_geometry geometry, uint32_t bins,
                              evt_coo_layout* out) {
  if (out == nullptr) return fail_invalid("evt_coo_layout_for: null argument");
  return guarded([&] {
    const evtcodec::CooLayout layout =
        evtcodec::layout_for(to_core(format), to_core(geometry), bins);
    *out = {layout.x_bits,       layout.y_bits,    layout.bin_bits,
            layout.channel_bits, layout.data_bits, layout.record_bytes};
  });
}

evt_status evt_coo_encode(const evt_tensor* tensor, evt_coo** out) {
  if (tensor == nullptr || out == nullptr) return fail_invalid("evt_coo_encode: null argument");
  return guarded([&] { *out = new evt_coo{evtcodec::coo_encode(tensor->impl)}; });
}

evt_status evt_coo_decode(const evt_coo* coo, evt_tensor** out) {
  if (coo == nullptr || out == nullptr) return fail_invalid("evt_coo_decode: null argument");
  return guarded([&] { *out = new evt_tensor{evtcodec::coo_decode(coo->impl)}; });
}

void evt_coo_free(evt_coo* coo) { delete coo; }

evt_status evt_coo_record_count(const evt_coo* coo, uint64_t* out) {
  if (coo == nullptr || out == nullptr) return fail_invalid("evt_coo_record_count: null argument");
  *out = coo->impl.record_count();
  return EVT_OK;
}

evt_status evt_coo_get_layout(const evt_coo* coo, evt_coo_layout* out) {
  if (coo == nullptr || out == nullptr) return fail_invalid("evt_coo_get_layout: null argument");
  const evtcodec::CooLayout& layout = coo->impl.layout();
  *out = {layout.x_bits,       layout.y_bits,    layout.bin_bits,
          layout.channel_bits, layout.data_bits, layout.record_bytes};
  return EVT_OK;
}

evt_status evt_coo_bytes(const evt_coo* coo, const uint8_t** out_bytes, size_t* out_len) {
  if (coo == nullptr || out_bytes == nullptr || out_len == nullptr) {
    return fail_invalid("evt_coo_bytes: null argument");
  }
  *out_bytes = coo->impl.bytes().data();
  *out_len = coo->impl.bytes().size();
  return EVT_OK;
}

evt_status evt_coo_read(const char* path, evt_coo** out) {
  if (path == nullptr || out == nullptr) return fail_invalid("evt_coo_read: null argument");
  return guarded([&] { *out = new evt_coo{evtcodec::read_coo(path)}; });
}

evt_status evt_coo_write(const evt_coo* coo, const char* path) {
  if (coo == nullptr || path == nullptr) return fail_invalid("evt_coo_write: null argument");
  return guarded([&] { evtcodec::write_coo(coo->impl, path); });
}

/* ---- augmentations --------------------------------------------------- */

evt_status evt_rps_draw(double s, double p, uint64_t seed, evt_rps_branch* out) {
  if (out == nullptr) return fail_invalid("evt_rps_draw: null argument");
  return guarded([&] {
    *out = static_cast<evt_rps_branch>(evtcodec::rps_draw(evtcodec::RpsConfig{s, p}, seed));
  });
}

evt_status evt_rps_apply(const evt_tensor* tensor, evt_rps_branch branch, evt_tensor** out) {
  if (tensor == nullptr || out == nullptr) return fail_invalid("evt_rps_apply: null argument");
  if (branch < EVT_RPS_IDENTITY || branch > EVT_RPS_KEEP_NEGATIVE) {
    return fail_invalid("evt_rps_apply: unknown branch");
  }
  return guarded([&] {
    *out = new evt_tensor{
        evtcodec::rps_apply(tensor->impl, static_cast<evtcodec::RpsBranch>(branch))};
  });
}

evt_status evt_hflip(const evt_tensor* tensor, evt_tensor** out) {
  if (tensor == nullptr || out == nullptr) return fail_invalid("evt_hflip: null argument");
  return guarded([&] { *out = new evt_tensor{evtcodec::hflip(tensor->impl)}; });
}

evt_status evt_zoom_out(const evt_tensor* tensor, double scale, uint32_t row_offset,
                        uint32_t col_offset, evt_tensor** out) {
  if (tensor == nullptr || out == nullptr) return fail_invalid("evt_zoom_out: null argument");
  return guarded([&] {
    *out = new evt_tensor{evtcodec::zoom_out(tensor->impl, scale, row_offset, col_offset)};
  });
}

evt_status evt_draw_sequence(double rps_s, double rps_p, double hflip_prob, double zoom_prob,
                             evt_geometry geometry, uint64_t seed, evt_sequence_draw* out) {
  if (out == nullptr) return fail_invalid("evt_draw_sequence: null argument");
  return guarded([&] {
    evtcodec::AugConfig config;
    config.rps = {rps_s, rps_p};
    config.hflip_prob = hflip_prob;
    config.zoom_prob = zoom_prob;
    const evtcodec::AugSequenceDraw draw =
        evtcodec::draw_sequence(config, to_core(geometry), seed);
    out->seed = draw.seed;
    out->rps = static_cast<evt_rps_branch>(draw.rps);
    out->hflip = draw.hflip ? 1 : 0;
    out->zoom = draw.zoom_scale.has_value() ? 1 : 0;
    out->zoom_scale = draw.zoom_scale.value_or(1.0);
    out->zoom_row = draw.zoom_row;
    out->zoom_col = draw.zoom_col;
  });
}

evt_status evt_apply_draw(const evt_tensor* tensor, const evt_sequence_draw* draw,
                          evt_tensor** out) {
  if (tensor == nullptr || draw == nullptr || out == nullptr) {
    return fail_invalid("evt_apply_draw: null argument");
  }
  return guarded([&] {
    evtcodec::AugSequenceDraw core_draw;
    core_draw.seed = draw->seed;
    core_draw.rps = static_cast<evtcodec::RpsBranch>(draw->rps);
    core_draw.hflip = draw->hflip != 0;
    if (draw->zoom != 0) core_draw.zoom_scale = draw->zoom_scale;
    core_draw.zoom_row = draw->zoom_row;
    core_draw.zoom_col = draw->zoom_col;
    *out = new evt_tensor{evtcodec::apply_draw(tensor->impl, core_draw)};
  });
}

/* ---- size model and benchmarking ------------------------------------- */

evt_status evt_compute_sizes(uint64_t non_zeros, uint32_t record_bytes, uint64_t events,
                             uint32_t raw_event_bytes, double window_seconds,
                             double latency_seconds, uint64_t* out_encoded_bytes,
                             double* out_compression_ratio, double* out_bw_mbs) {
  if (out_encoded_bytes == nullptr || out_compression_ratio == nullptr ||
      out_bw_mbs == nullptr) {
    return fail_invalid("evt_compute_sizes: null argument");
  }
  return guarded([&] {
    const evtcodec::DerivedSizes sizes = evtcodec::compute_sizes(
        non_zeros, record_bytes, events, raw_event_bytes, window_seconds, latency_seconds);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    *out_encoded_bytes = sizes.encoded_bytes;
    *out_compression_ratio = sizes.compression_ratio.value_or(nan);
    *out_bw_mbs = sizes.bandwidth_mbs.value_or(nan);
  });
}

evt_status evt_measure_encode(const evt_stream* chunk, evt_window window, evt_format format,
                              uint32_t repetitions, uint32_t raw_event_bytes,
                              evt_report* out) {
  if (chunk == nullptr || out == nullptr) return fail_invalid("evt_measure_encode: null argument");
  return guarded([&] {
    *out = report_from_core(evtcodec::measure_encode(chunk->impl, to_core(window),
                                                     to_core(format), repetitions,
                                                     raw_event_bytes));
  });
}

evt_status evt_bench_run(const char* const* paths, size_t path_count, const char* format_hint,
                         const evt_geometry* csv_geometry, uint64_t window_len_us,
                         uint32_t bins, const evt_format* formats, size_t format_count,
                         uint32_t repetitions, uint32_t raw_event_bytes, evt_bench** out) {
  if (paths == nullptr || formats == nullptr || out == nullptr) {
    return fail_invalid("evt_bench_run: null argument");
  }
  return guarded([&] {
    std::optional<evtcodec::SensorGeometry> geometry;
    if (csv_geometry != nullptr) geometry = to_core(*csv_geometry);
    const auto hint = event_format_from_hint(format_hint);

    std::vector<evtcodec::EventStream> streams;
    streams.reserve(path_count);
    for (size_t i = 0; i < path_count; ++i) {
      streams.push_back(evtcodec::read_events(paths[i], hint, geometry));
    }
    std::vector<evtcodec::Format> core_formats;
    core_formats.reserve(format_count);
    for (size_t i = 0; i < format_count; ++i) core_formats.push_back(to_core(formats[i]));

    *out = new evt_bench{evtcodec::bench_corpus(streams, window_len_us, bins, core_formats,
                                                repetitions, raw_event_bytes)};
  });
}

evt_status evt_bench_from_counts(const char* counts_csv_path, evt_geometry geometry,
                                 uint32_t bins, uint64_t window_len_us,
                                 uint32_t raw_event_bytes, evt_bench** out) {
  if (counts_csv_path == nullptr || out == nullptr) {
    return fail_invalid("evt_bench_from_counts: null argument");
  }
  return guarded([&] {
    std::ifstream in(counts_csv_path);
    if (!in) evtcodec::raise(evtcodec::Errc::io, std::string("cannot open ") + counts_csv_path);
    *out = new evt_bench{evtcodec::replay_from_counts(in, to_core(geometry), bins,
                                                      window_len_us, raw_event_bytes)};
  });
}

void evt_bench_free(evt_bench* bench) { delete bench; }

evt_status evt_bench_row_count(const evt_bench* bench, size_t* out) {
  if (bench == nullptr || out == nullptr) return fail_invalid("evt_bench_row_count: null argument");
  *out = bench->impl.rows.size();
  return EVT_OK;
}

evt_status evt_bench_row(const evt_bench* bench, size_t index, evt_report* out_report,
                         const char** out_scenario) {
  if (bench == nullptr) return fail_invalid("evt_bench_row: null argument");
  if (index >= bench->impl.rows.size()) {
    t_last_error = "evt_bench_row: index outside report";
    return EVT_ERR_BOUNDS;
  }
  const evtcodec::BenchSummary::Row& row = bench->impl.rows[index];
  if (out_report != nullptr) *out_report = report_from_core(row.report);
  if (out_scenario != nullptr) *out_scenario = evtcodec::scenario_name(row.scenario);
  return EVT_OK;
}

evt_status evt_bench_write_report(const evt_bench* bench, const char* kind, const char* path) {
  if (bench == nullptr || kind == nullptr || path == nullptr) {
    return fail_invalid("evt_bench_write_report: null argument");
  }
  return guarded([&] {
    std::ostringstream buffer;
    if (std::strcmp(kind, "csv") == 0) {
      evtcodec::write_report_csv(bench->impl, buffer);
    } else if (std::strcmp(kind, "json") == 0) {
      evtcodec::write_report_json(bench->impl, buffer);
    } else {
      evtcodec::raise(evtcodec::Errc::invalid_argument, "report kind must be csv or json");
    }
    if (std::strcmp(path, "-") == 0) {
      std::cout << buffer.str();
      std::cout.flush();
    } else {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) evtcodec::raise(evtcodec::Errc::io, std::string("cannot open ") + path);
      out << buffer.str();
      if (!out) evtcodec::raise(evtcodec::Errc::io, std::string("write failure on ") + path);
    }
  });
}

} /* extern "C" */
