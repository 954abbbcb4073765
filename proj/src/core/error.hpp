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

#ifndef EVTCODEC_CORE_ERROR_HPP
#define EVTCODEC_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace evtcodec {

enum class Errc {
  invalid_argument,
  out_of_window,
  bounds,
  parse,
  io,
  codec,
  corrupt,
  unsupported,
};

/// All library failures surface as Error; code() maps 1:1 onto the C API
/// status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace evtcodec

#endif  // EVTCODEC_CORE_ERROR_HPP
