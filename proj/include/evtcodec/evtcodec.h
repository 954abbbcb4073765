/* Copyright 2026 The evtcodec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* evtcodec — event-stream tensor encodings (VTEI, SHist, MDES, Voxel Grid),
 * a byte-exact sparse COO codec, polarity-domain augmentations, and a
 * benchmarking harness, behind a C ABI.
 *
 * Conventions:
 *   - every fallible call returns evt_status; EVT_OK is 0
 *   - evt_last_error() describes the most recent failure on this thread
 *   - objects returned through evt_*** out-parameters are owned by the
 *     caller and released with the matching evt_*_free()
 *   - all binary formats are little-endian (see FORMATS.md)
 */

#ifndef EVTCODEC_H
#define EVTCODEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(EVTCODEC_BUILD)
#define EVT_API __declspec(dllexport)
#else
#define EVT_API __declspec(dllimport)
#endif
#else
#define EVT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum evt_status {
  EVT_OK = 0,
  EVT_ERR_INVALID_ARGUMENT = 1,
  EVT_ERR_OUT_OF_WINDOW = 2,
  EVT_ERR_BOUNDS = 3,
  EVT_ERR_PARSE = 4,
  EVT_ERR_IO = 5,
  EVT_ERR_CODEC = 6,
  EVT_ERR_CORRUPT = 7,
  EVT_ERR_UNSUPPORTED = 8,
  EVT_ERR_INTERNAL = 9
} evt_status;

typedef enum evt_format {
  EVT_FORMAT_VTEI = 0,  /* B x H x W ternary, last event per uniform bin   */
  EVT_FORMAT_SHIST = 1, /* 2B x H x W uint8 counts, negative group first   */
  EVT_FORMAT_MDES = 2,  /* B x H x W ternary over halving trailing windows */
  EVT_FORMAT_VOXEL = 3  /* 2B x H x W float32 bilinear kernel weights      */
} evt_format;

typedef enum evt_dtype {
  EVT_DTYPE_TERNARY_I8 = 0,
  EVT_DTYPE_COUNT_U8 = 1,
  EVT_DTYPE_F32 = 2
} evt_dtype;

typedef enum evt_rps_branch {
  EVT_RPS_IDENTITY = 0,
  EVT_RPS_KEEP_POSITIVE = 1,
  EVT_RPS_KEEP_NEGATIVE = 2
} evt_rps_branch;

typedef struct evt_geometry {
  uint16_t width;
  uint16_t height;
} evt_geometry;

/* Sampling window [t_start_us, t_end_us] split into `bins` uniform bins. */
typedef struct evt_window {
  uint64_t t_start_us;
  uint64_t t_end_us;
  uint32_t bins;
} evt_window;

typedef struct evt_event {
  uint64_t t_us;
  uint16_t x;
  uint16_t y;
  int8_t p; /* +1 or -1 */
} evt_event;

typedef struct evt_coo_layout {
  uint32_t x_bits;
  uint32_t y_bits;
  uint32_t bin_bits;
  uint32_t channel_bits;
  uint32_t data_bits;
  uint32_t record_bytes;
} evt_coo_layout;

/* Opaque handles. */
typedef struct evt_stream evt_stream;
typedef struct evt_chunks evt_chunks;
typedef struct evt_tensor evt_tensor;
typedef struct evt_coo evt_coo;
typedef struct evt_bench evt_bench;

EVT_API const char* evt_version(void);
/* Message for the most recent failure on the calling thread; never NULL. */
EVT_API const char* evt_last_error(void);
EVT_API const char* evt_status_name(evt_status status);

/* ---- event streams ------------------------------------------------- */

EVT_API evt_status evt_stream_create(evt_geometry geometry, const evt_event* events,
                                     size_t count, evt_stream** out);
EVT_API void evt_stream_free(evt_stream* stream);
EVT_API size_t evt_stream_size(const evt_stream* stream);
EVT_API evt_status evt_stream_geometry(const evt_stream* stream, evt_geometry* out);
/* Copies up to `capacity` events into `out`; fails unless the whole stream fits. */
EVT_API evt_status evt_stream_copy_events(const evt_stream* stream, evt_event* out,
                                          size_t capacity);

/* `format` is "csv", "evb1", or NULL for detection by magic. CSV carries no
 * geometry, so `csv_geometry` is required for it. */
EVT_API evt_status evt_stream_read(const char* path, const char* format,
                                   const evt_geometry* csv_geometry, evt_stream** out);
EVT_API evt_status evt_stream_write(const evt_stream* stream, const char* path,
                                    const char* format);

/* Deterministic synthetic recording; pattern is "moving-bar", "moving-dot"
 * or "static-noise". `contrast` is the event trigger threshold (may be
 * INFINITY for a silent stream). */
EVT_API evt_status evt_synth(evt_geometry geometry, uint64_t duration_us, const char* pattern,
                             double contrast, uint64_t seed, uint64_t tick_us,
                             evt_stream** out);

/* ---- temporal binning and chunking ---------------------------------- */

/* Uniform bin index for t inside the window; t == t_end lands in the last
 * bin. EVT_ERR_OUT_OF_WINDOW outside [t_start, t_end]. */
EVT_API evt_status evt_assign_bin(uint64_t t_us, evt_window window, uint32_t* out_bin);

/* Consecutive half-open windows of `window_len_us` anchored at the first
 * event; empty chunks are included. */
EVT_API evt_status evt_chunk_stream(const evt_stream* stream, uint64_t window_len_us,
                                    uint32_t bins, evt_chunks** out);
EVT_API void evt_chunks_free(evt_chunks* chunks);
EVT_API size_t evt_chunks_size(const evt_chunks* chunks);
EVT_API evt_status evt_chunks_get(const evt_chunks* chunks, size_t index,
                                  evt_stream** out_events, evt_window* out_window);

/* ---- encoders and tensors ------------------------------------------- */

EVT_API evt_status evt_encode(const evt_stream* chunk, evt_window window, evt_format format,
                              evt_tensor** out);
EVT_API void evt_tensor_free(evt_tensor* tensor);
EVT_API evt_status evt_tensor_format(const evt_tensor* tensor, evt_format* out);
EVT_API evt_status evt_tensor_dtype(const evt_tensor* tensor, evt_dtype* out);
EVT_API evt_status evt_tensor_window(const evt_tensor* tensor, evt_window* out);
EVT_API evt_status evt_tensor_geometry(const evt_tensor* tensor, evt_geometry* out);
/* dims are channel-major: {channels, height, width}. */
EVT_API evt_status evt_tensor_dims(const evt_tensor* tensor, uint32_t out_dims[3]);
/* Borrowed pointer to the row-major cell buffer; valid until the tensor is
 * freed. Element type matches evt_tensor_dtype(). */
EVT_API evt_status evt_tensor_data(const evt_tensor* tensor, const void** out_data,
                                   size_t* out_bytes);
EVT_API evt_status evt_tensor_nonzeros(const evt_tensor* tensor, uint64_t* out);

EVT_API evt_status evt_tensor_read(const char* path, evt_tensor** out);
EVT_API evt_status evt_tensor_write(const evt_tensor* tensor, const char* path);
/* Grayscale PGM of one channel (ternary display mapping -1/0/+1 -> 0/128/255). */
EVT_API evt_status evt_tensor_write_pgm(const evt_tensor* tensor, uint32_t channel,
                                        const char* path);

/* ---- sparse COO codec ------------------------------------------------ */

EVT_API evt_status evt_coo_layout_for(evt_format format, evt_geometry geometry, uint32_t bins,
                                      evt_coo_layout* out);
EVT_API evt_status evt_coo_encode(const evt_tensor* tensor, evt_coo** out);
EVT_API evt_status evt_coo_decode(const evt_coo* coo, evt_tensor** out);
EVT_API void evt_coo_free(evt_coo* coo);
EVT_API evt_status evt_coo_record_count(const evt_coo* coo, uint64_t* out);
EVT_API evt_status evt_coo_get_layout(const evt_coo* coo, evt_coo_layout* out);
/* Borrowed pointer to the packed records. */
EVT_API evt_status evt_coo_bytes(const evt_coo* coo, const uint8_t** out_bytes,
                                 size_t* out_len);
EVT_API evt_status evt_coo_read(const char* path, evt_coo** out);
EVT_API evt_status evt_coo_write(const evt_coo* coo, const char* path);

/* ---- augmentations --------------------------------------------------- */

/* Draws r1, r2 in [0,1): identity when r1 >= s, keep-positive when r2 >= p,
 * keep-negative otherwise. */
EVT_API evt_status evt_rps_draw(double s, double p, uint64_t seed, evt_rps_branch* out);
EVT_API evt_status evt_rps_apply(const evt_tensor* tensor, evt_rps_branch branch,
                                 evt_tensor** out);
EVT_API evt_status evt_hflip(const evt_tensor* tensor, evt_tensor** out);
EVT_API evt_status evt_zoom_out(const evt_tensor* tensor, double scale, uint32_t row_offset,
                                uint32_t col_offset, evt_tensor** out);

/* Augmentation parameters drawn once per training sequence; apply the same
 * draw to every tensor of the sequence to keep it consistent. */
typedef struct evt_sequence_draw {
  uint64_t seed;
  evt_rps_branch rps;
  int hflip;          /* boolean */
  int zoom;           /* boolean; scale/offsets below are valid when set */
  double zoom_scale;  /* in [1.0, 1.2] */
  uint32_t zoom_row;
  uint32_t zoom_col;
} evt_sequence_draw;

EVT_API evt_status evt_draw_sequence(double rps_s, double rps_p, double hflip_prob,
                                     double zoom_prob, evt_geometry geometry, uint64_t seed,
                                     evt_sequence_draw* out);
EVT_API evt_status evt_apply_draw(const evt_tensor* tensor, const evt_sequence_draw* draw,
                                  evt_tensor** out);

/* ---- size model and benchmarking ------------------------------------- */

/* Encoded bytes = non_zeros * record_bytes; compression ratio divides the
 * raw event payload (raw_event_bytes per event) by the encoded bytes;
 * bandwidth divides encoded bytes by (window + latency). MB is 2^20 bytes.
 * Ratio and bandwidth come back as NaN when nothing was encoded. */
EVT_API evt_status evt_compute_sizes(uint64_t non_zeros, uint32_t record_bytes,
                                     uint64_t events, uint32_t raw_event_bytes,
                                     double window_seconds, double latency_seconds,
                                     uint64_t* out_encoded_bytes,
                                     double* out_compression_ratio, double* out_bw_mbs);

typedef struct evt_report {
  evt_format format;
  uint64_t events;
  double latency_seconds; /* median of the measured repetitions */
  double event_rate_mevs;
  uint64_t non_zeros;
  uint64_t encoded_bytes;
  uint64_t raw_bytes;
  double compression_ratio; /* NaN when absent */
  double bw_mbs;            /* NaN when absent */
} evt_report;

/* Median wall-clock encode latency over `repetitions` runs (one discarded
 * warm-up) plus the size model figures for one chunk. */
EVT_API evt_status evt_measure_encode(const evt_stream* chunk, evt_window window,
                                      evt_format format, uint32_t repetitions,
                                      uint32_t raw_event_bytes, evt_report* out);

/* Chunks the input recordings, picks the average/maximum/minimum-event
 * chunks, and measures every requested format on each. `format_hint` and
 * `csv_geometry` behave as in evt_stream_read. */
EVT_API evt_status evt_bench_run(const char* const* paths, size_t path_count,
                                 const char* format_hint, const evt_geometry* csv_geometry,
                                 uint64_t window_len_us, uint32_t bins,
                                 const evt_format* formats, size_t format_count,
                                 uint32_t repetitions, uint32_t raw_event_bytes,
                                 evt_bench** out);

/* Replays (events, non_zeros, latency_ms) triples from a CSV file with
 * header `format,scenario,events,non_zeros,latency_ms` through the size
 * model, so reports can be regenerated without recordings or timing noise. */
EVT_API evt_status evt_bench_from_counts(const char* counts_csv_path, evt_geometry geometry,
                                         uint32_t bins, uint64_t window_len_us,
                                         uint32_t raw_event_bytes, evt_bench** out);

EVT_API void evt_bench_free(evt_bench* bench);
EVT_API evt_status evt_bench_row_count(const evt_bench* bench, size_t* out);
/* Scenario is "average", "maximum" or "minimum". */
EVT_API evt_status evt_bench_row(const evt_bench* bench, size_t index, evt_report* out_report,
                                 const char** out_scenario);
/* kind is "csv" or "json"; path "-" writes to stdout. */
EVT_API evt_status evt_bench_write_report(const evt_bench* bench, const char* kind,
                                          const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EVTCODEC_H */
