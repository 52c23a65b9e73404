/*
   Copyright 2026 The galord authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef GALORD_ERRORS_HPP
#define GALORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galord {

/// Error categories surfaced through the C API and the CLI exit codes.
enum class errc {
  parameter,                // malformed input (non-prime p, bad flag value, ...)
  out_of_range,             // a ramification jump outside its admissible band
  parity_violation,         // even jump where an odd one is forced
  divisibility_violation,   // p | t without t sitting at the maximal bound
  not_applicable,           // profile quantities requested in the degenerate a = 0 case
  domain,                   // half-integer fed to the nearest-integer distance
  rank_deficient,           // stacked action matrix with rank < n
  precondition_violated,    // certificate routine called outside its expansion-length band
  structure_mismatch,       // computed pattern contradicts the certified structure
  internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace galord

#endif
