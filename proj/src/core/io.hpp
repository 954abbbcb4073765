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

#ifndef EVTCODEC_CORE_IO_HPP
#define EVTCODEC_CORE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "core/coo.hpp"
#include "core/tensor.hpp"

namespace evtcodec {

// On-disk formats (see FORMATS.md for the byte-level reference):
//   - event CSV: header `t_us,x,y,p`, one event per line
//   - EVB1: binary event container, 16-byte little-endian records
//   - ETN1: dense tensor container
//   - ECO1: framed COO buffer
// Readers reject structurally invalid input instead of repairing it; the one
// documented normalization is CSV polarity 0 -> -1 (the 0/1 convention used
// by several public event datasets).

// Vendor camera containers (Prophesee DAT/RAW, DAVIS AEDAT) are not parsed
// natively; convert them to CSV or EVB1 first. A native reader would slot
// into read_events' magic dispatch and this enum.
enum class EventFileFormat { Csv, Evb1 };

/// Reads CSV or EVB1 events. Without a hint the format is detected from the
/// EVB1 magic, falling back to CSV. CSV carries no geometry, so one must be
/// supplied for it.
EventStream read_events(const std::string& path,
                        std::optional<EventFileFormat> format_hint = std::nullopt,
                        std::optional<SensorGeometry> csv_geometry = std::nullopt);

void write_events(const EventStream& stream, const std::string& path, EventFileFormat format);

EventStream read_events_csv(std::istream& in, SensorGeometry geometry,
                            const std::string& name);
void write_events_csv(const EventStream& stream, std::ostream& out);
EventStream read_events_evb1(std::istream& in, const std::string& name);
void write_events_evb1(const EventStream& stream, std::ostream& out);

DenseTensor read_tensor(const std::string& path);
void write_tensor(const DenseTensor& tensor, const std::string& path);
DenseTensor read_tensor_etn1(std::istream& in, const std::string& name);
void write_tensor_etn1(const DenseTensor& tensor, std::ostream& out);

CooBuffer read_coo(const std::string& path);
void write_coo(const CooBuffer& buffer, const std::string& path);
CooBuffer read_coo_eco1(std::istream& in, const std::string& name);
void write_coo_eco1(const CooBuffer& buffer, std::ostream& out);

/// One channel as a binary PGM. Ternary values use the grayscale display
/// mapping {-1 -> 0, 0 -> 128, +1 -> 255}; counts are written raw; float
/// channels are scaled by the tensor maximum.
void write_pgm(const DenseTensor& tensor, uint32_t channel, std::ostream& out);
void write_pgm(const DenseTensor& tensor, uint32_t channel, const std::string& path);

enum class SynthPattern { MovingBar, MovingDot, StaticNoise };
SynthPattern synth_pattern_from_name(std::string_view name);

/// Deterministic event generator: simulates a log-intensity field for the
/// chosen pattern on a fixed tick grid and emits an event whenever a pixel's
/// intensity has drifted at least `contrast` away from its level at the last
/// event (the per-pixel reference resets on every emitted event).
EventStream synth_events(SensorGeometry geometry, uint64_t duration_us, SynthPattern pattern,
                         double contrast, uint64_t seed, uint64_t tick_us = 1000);

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_IO_HPP
