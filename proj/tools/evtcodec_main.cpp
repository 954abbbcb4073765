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

// Command-line front end. Everything goes through the public C API so the
// tool doubles as a reference client for the shared library.

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "evtcodec/evtcodec.h"

namespace {

int fail(const std::string& context, evt_status status) {
  std::cerr << "error: " << context << ": " << evt_status_name(status) << ": "
            << evt_last_error() << "\n";
  return 1;
}

unsigned worker_count(size_t jobs) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EVTCODEC_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap >= 1) workers = static_cast<unsigned>(cap);
  }
  return static_cast<unsigned>(std::min<size_t>(workers, std::max<size_t>(jobs, 1)));
}

struct GenOptions {
  std::string pattern = "moving-bar";
  double duration_ms = 500.0;
  double contrast = 0.2;
  uint64_t seed = 0;
  uint64_t tick_us = 1000;
  uint32_t width = 304;
  uint32_t height = 240;
  std::string output;
};

int run_gen(const GenOptions& opt) {
  evt_stream* stream = nullptr;
  const evt_geometry geometry{static_cast<uint16_t>(opt.width),
                              static_cast<uint16_t>(opt.height)};
  const auto duration_us = static_cast<uint64_t>(opt.duration_ms * 1000.0);
  evt_status status = evt_synth(geometry, duration_us, opt.pattern.c_str(), opt.contrast,
                                opt.seed, opt.tick_us, &stream);
  if (status != EVT_OK) return fail("gen", status);

  const bool csv = opt.output.size() >= 4 &&
                   opt.output.compare(opt.output.size() - 4, 4, ".csv") == 0;
  status = evt_stream_write(stream, opt.output.c_str(), csv ? "csv" : "evb1");
  const size_t count = evt_stream_size(stream);
  evt_stream_free(stream);
  if (status != EVT_OK) return fail("gen: " + opt.output, status);
  std::cout << "wrote " << count << " events to " << opt.output << "\n";
  return 0;
}

struct EncodeOptions {
  std::string input;
  std::string input_format;  // "", "csv", "evb1"
  std::string format = "vtei";
  uint32_t bins = 5;
  uint64_t window_us = 50000;
  uint32_t width = 304;
  uint32_t height = 240;
  std::string out_dir = ".";
  bool write_tensors = false;
  bool write_coo = false;
  bool augment = false;
  double rps_s = 0.05;
  double rps_p = 0.5;
  double hflip_prob = 0.0;
  double zoom_prob = 0.0;
  uint64_t seed = 0;
};

evt_status parse_format(const std::string& name, evt_format* out) {
  if (name == "vtei") *out = EVT_FORMAT_VTEI;
  else if (name == "shist") *out = EVT_FORMAT_SHIST;
  else if (name == "mdes") *out = EVT_FORMAT_MDES;
  else if (name == "voxel") *out = EVT_FORMAT_VOXEL;
  else return EVT_ERR_INVALID_ARGUMENT;
  return EVT_OK;
}

int run_encode(const EncodeOptions& opt) {
  evt_format format;
  if (parse_format(opt.format, &format) != EVT_OK) {
    std::cerr << "error: encode: unknown format '" << opt.format << "'\n";
    return 1;
  }

  const evt_geometry csv_geometry{static_cast<uint16_t>(opt.width),
                                  static_cast<uint16_t>(opt.height)};
  evt_stream* stream = nullptr;
  evt_status status =
      evt_stream_read(opt.input.c_str(), opt.input_format.empty() ? nullptr : opt.input_format.c_str(),
                      &csv_geometry, &stream);
  if (status != EVT_OK) return fail("encode: " + opt.input, status);

  evt_geometry geometry;
  evt_stream_geometry(stream, &geometry);

  evt_sequence_draw draw{};
  if (opt.augment) {
    status = evt_draw_sequence(opt.rps_s, opt.rps_p, opt.hflip_prob, opt.zoom_prob, geometry,
                               opt.seed, &draw);
    if (status != EVT_OK) {
      evt_stream_free(stream);
      return fail("encode: augmentation draw", status);
    }
  }

  evt_chunks* chunks = nullptr;
  status = evt_chunk_stream(stream, opt.window_us, opt.bins, &chunks);
  evt_stream_free(stream);
  if (status != EVT_OK) return fail("encode: chunking", status);

  std::error_code fs_error;
  std::filesystem::create_directories(opt.out_dir, fs_error);

  const size_t chunk_count = evt_chunks_size(chunks);
  std::vector<std::string> lines(chunk_count);
  std::vector<std::string> errors(chunk_count);
  std::atomic<size_t> next{0};

  std::vector<size_t> chunk_events(chunk_count);
  for (size_t i = 0; i < chunk_count; ++i) {
    evt_stream* chunk = nullptr;
    status = evt_chunks_get(chunks, i, &chunk, nullptr);
    if (status != EVT_OK) {
      evt_chunks_free(chunks);
      return fail("encode: chunk " + std::to_string(i), status);
    }
    chunk_events[i] = evt_stream_size(chunk);
    evt_stream_free(chunk);
  }

  // One draw per recording, applied identically to every chunk; chunks are
  // independent so the pool is safe.
  const auto pooled_worker = [&]() {
    for (size_t i = next.fetch_add(1); i < chunk_count; i = next.fetch_add(1)) {
      evt_stream* chunk = nullptr;
      evt_window window;
      evt_status st = evt_chunks_get(chunks, i, &chunk, &window);
      if (st != EVT_OK) {
        errors[i] = evt_last_error();
        continue;
      }
      evt_tensor* tensor = nullptr;
      st = evt_encode(chunk, window, format, &tensor);
      evt_stream_free(chunk);
      if (st != EVT_OK) {
        errors[i] = evt_last_error();
        continue;
      }
      if (opt.augment) {
        evt_tensor* augmented = nullptr;
        st = evt_apply_draw(tensor, &draw, &augmented);
        evt_tensor_free(tensor);
        if (st != EVT_OK) {
          errors[i] = evt_last_error();
          continue;
        }
        tensor = augmented;
      }

      uint64_t non_zeros = 0;
      evt_tensor_nonzeros(tensor, &non_zeros);

      char name[64];
      std::snprintf(name, sizeof(name), "chunk_%05zu", i);
      const std::string base = opt.out_dir + "/" + name;
      st = EVT_OK;
      if (opt.write_tensors) st = evt_tensor_write(tensor, (base + ".etn").c_str());
      if (st == EVT_OK && opt.write_coo) {
        evt_coo* coo = nullptr;
        st = evt_coo_encode(tensor, &coo);
        if (st == EVT_OK) {
          st = evt_coo_write(coo, (base + ".eco").c_str());
          evt_coo_free(coo);
        }
      }
      if (st != EVT_OK) {
        errors[i] = evt_last_error();
        evt_tensor_free(tensor);
        continue;
      }
      char line[128];
      std::snprintf(line, sizeof(line), "chunk %zu: events=%zu nonzeros=%" PRIu64, i,
                    chunk_events[i], non_zeros);
      lines[i] = line;
      evt_tensor_free(tensor);
    }
  };

  std::vector<std::thread> pool;
  const unsigned workers = worker_count(chunk_count);
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(pooled_worker);
  for (std::thread& t : pool) t.join();
  evt_chunks_free(chunks);

  for (size_t i = 0; i < chunk_count; ++i) {
    if (!errors[i].empty()) {
      std::cerr << "error: encode: chunk " << i << ": " << errors[i] << "\n";
      return 1;
    }
    std::cout << lines[i] << "\n";
  }
  return 0;
}

struct BenchOptions {
  std::vector<std::string> inputs;
  std::string input_format;
  std::vector<std::string> formats{"vtei", "shist", "mdes", "voxel"};
  uint64_t window_us = 50000;
  uint32_t bins = 5;
  uint32_t reps = 11;
  uint32_t raw_event_bytes = 4;
  uint32_t width = 304;
  uint32_t height = 240;
  std::string report_kind = "csv";
  std::string output = "-";
  std::string from_counts;
};

int run_bench(const BenchOptions& opt) {
  const evt_geometry geometry{static_cast<uint16_t>(opt.width),
                              static_cast<uint16_t>(opt.height)};
  evt_bench* bench = nullptr;
  evt_status status;
  if (!opt.from_counts.empty()) {
    status = evt_bench_from_counts(opt.from_counts.c_str(), geometry, opt.bins, opt.window_us,
                                   opt.raw_event_bytes, &bench);
    if (status != EVT_OK) return fail("bench: " + opt.from_counts, status);
  } else {
    if (opt.inputs.empty()) {
      std::cerr << "error: bench: no input recordings (or --from-counts) given\n";
      return 1;
    }
    std::vector<evt_format> formats;
    for (const std::string& name : opt.formats) {
      evt_format f;
      if (parse_format(name, &f) != EVT_OK) {
        std::cerr << "error: bench: unknown format '" << name << "'\n";
        return 1;
      }
      formats.push_back(f);
    }
    std::vector<const char*> paths;
    paths.reserve(opt.inputs.size());
    for (const std::string& p : opt.inputs) paths.push_back(p.c_str());
    status = evt_bench_run(paths.data(), paths.size(),
                           opt.input_format.empty() ? nullptr : opt.input_format.c_str(),
                           &geometry, opt.window_us, opt.bins, formats.data(), formats.size(),
                           opt.reps, opt.raw_event_bytes, &bench);
    if (status != EVT_OK) return fail("bench", status);
  }

  status = evt_bench_write_report(bench, opt.report_kind.c_str(), opt.output.c_str());
  evt_bench_free(bench);
  if (status != EVT_OK) return fail("bench: report", status);
  return 0;
}

struct PgmOptions {
  std::string input;
  std::string output;
  int32_t channel = -1;  // -1 exports every channel
};

int run_pgm(const PgmOptions& opt) {
  evt_tensor* tensor = nullptr;
  evt_status status = evt_tensor_read(opt.input.c_str(), &tensor);
  if (status != EVT_OK) return fail("pgm: " + opt.input, status);

  uint32_t dims[3];
  evt_tensor_dims(tensor, dims);
  uint32_t first = 0;
  uint32_t last = dims[0];
  if (opt.channel >= 0) {
    first = static_cast<uint32_t>(opt.channel);
    last = first + 1;
  }
  for (uint32_t c = first; c < last; ++c) {
    std::string path = opt.output;
    if (opt.channel < 0) {
      char suffix[32];
      std::snprintf(suffix, sizeof(suffix), "_c%02u.pgm", c);
      const size_t dot = path.rfind(".pgm");
      if (dot != std::string::npos) path.erase(dot);
      path += suffix;
    }
    status = evt_tensor_write_pgm(tensor, c, path.c_str());
    if (status != EVT_OK) {
      evt_tensor_free(tensor);
      return fail("pgm: channel " + std::to_string(c), status);
    }
    std::cout << "wrote " << path << "\n";
  }
  evt_tensor_free(tensor);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evtcodec: event-stream tensor encodings, sparse COO codec and benchmarks"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic event recording");
  gen_cmd->add_option("--pattern", gen.pattern, "moving-bar | moving-dot | static-noise")
      ->capture_default_str();
  gen_cmd->add_option("--duration-ms", gen.duration_ms, "Recording length")
      ->capture_default_str();
  gen_cmd->add_option("--contrast", gen.contrast, "Event trigger threshold (inf for none)")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--tick-us", gen.tick_us, "Simulation tick")->capture_default_str();
  gen_cmd->add_option("--width", gen.width, "Sensor width")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  gen_cmd->add_option("--height", gen.height, "Sensor height")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (.csv or .evb)")->required();

  EncodeOptions enc;
  CLI::App* enc_cmd = app.add_subcommand("encode", "Chunk a recording and encode tensors");
  enc_cmd->add_option("input", enc.input, "Event file (CSV or EVB1)")->required();
  enc_cmd->add_option("--input-format", enc.input_format, "csv | evb1 (default: detect)");
  enc_cmd->add_option("--format", enc.format, "vtei | shist | mdes | voxel")
      ->capture_default_str();
  enc_cmd->add_option("--bins", enc.bins, "Temporal bins per window")->capture_default_str();
  enc_cmd->add_option("--window-us", enc.window_us, "Sampling window")->capture_default_str();
  enc_cmd->add_option("--width", enc.width, "Sensor width (CSV input)")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  enc_cmd->add_option("--height", enc.height, "Sensor height (CSV input)")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  enc_cmd->add_option("-o,--out-dir", enc.out_dir, "Output directory")->capture_default_str();
  enc_cmd->add_flag("--tensors", enc.write_tensors, "Write ETN1 tensors (default)");
  enc_cmd->add_flag("--coo", enc.write_coo, "Write ECO1 sparse buffers");
  enc_cmd->add_flag("--augment", enc.augment, "Apply the seeded augmentation draw");
  auto* rps_s_opt = enc_cmd->add_option("--rps-s", enc.rps_s,
                                        "Polarity suppression probability (implies --augment)")
                        ->capture_default_str();
  auto* rps_p_opt =
      enc_cmd->add_option("--rps-p", enc.rps_p, "Positive-suppression probability")
          ->capture_default_str();
  auto* hflip_opt = enc_cmd->add_option("--hflip-prob", enc.hflip_prob,
                                        "Horizontal flip probability (implies --augment)")
                        ->capture_default_str();
  auto* zoom_opt = enc_cmd->add_option("--zoom-prob", enc.zoom_prob,
                                       "Zoom-out probability (implies --augment)")
                       ->capture_default_str();
  enc_cmd->add_option("--seed", enc.seed, "Augmentation sequence seed")->capture_default_str();

  BenchOptions bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Measure latency, sizes, compression and bandwidth");
  bench_cmd->add_option("inputs", bench.inputs, "Event recordings");
  bench_cmd->add_option("--input-format", bench.input_format, "csv | evb1 (default: detect)");
  bench_cmd->add_option("--formats", bench.formats, "Formats to measure")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--window-us", bench.window_us, "Sampling window")
      ->capture_default_str();
  bench_cmd->add_option("--bins", bench.bins, "Temporal bins")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Latency repetitions")->capture_default_str();
  bench_cmd->add_option("--raw-event-bytes", bench.raw_event_bytes,
                        "Raw bytes per event for the compression ratio")
      ->capture_default_str();
  bench_cmd->add_option("--width", bench.width, "Sensor width (CSV input)")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  bench_cmd->add_option("--height", bench.height, "Sensor height (CSV input)")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  bench_cmd->add_option("--report", bench.report_kind, "csv | json")->capture_default_str();
  bench_cmd->add_option("-o,--output", bench.output, "Report path ('-' for stdout)")
      ->capture_default_str();
  bench_cmd->add_option("--from-counts", bench.from_counts,
                        "Replay a format,scenario,events,non_zeros,latency_ms CSV");

  PgmOptions pgm;
  CLI::App* pgm_cmd = app.add_subcommand("pgm", "Export tensor channels as grayscale PGM");
  pgm_cmd->add_option("input", pgm.input, "ETN1 tensor file")->required();
  pgm_cmd->add_option("--channel", pgm.channel, "Channel index (default: all)");
  pgm_cmd->add_option("-o,--output", pgm.output, "Output PGM path")->required();

  CLI11_PARSE(app, argc, argv);

  if (*gen_cmd) return run_gen(gen);
  if (*enc_cmd) {
    if (rps_s_opt->count() || rps_p_opt->count() || hflip_opt->count() || zoom_opt->count()) {
      enc.augment = true;
    }
    if (!enc.write_tensors && !enc.write_coo) enc.write_tensors = true;
    return run_encode(enc);
  }
  if (*bench_cmd) return run_bench(bench);
  if (*pgm_cmd) return run_pgm(pgm);
  return 1;
}
