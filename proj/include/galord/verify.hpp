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
#ifndef GALORD_VERIFY_HPP
#define GALORD_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galord/ramification.hpp"

namespace galord {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample, or a summary count
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string format() const;
};

std::vector<std::string> suite_names();  // cfrac ... all

/// Runs one named invariant suite. max_p, when set, overrides each check's
/// default sweep bound; seed feeds the randomized reduction trials.
SuiteReport run_suite(const std::string& suite,
                      std::optional<std::int64_t> max_p, std::uint64_t seed);

/// The minimal valid tuple for (p, a) whose profile sits in the high band:
/// a0 = 0 when 2a > p (else 1), e = a + (p-1)a0 - (p-1)/2, t = (2a0-1)p + 2a.
RamificationData high_band_tuple(std::int64_t p, std::int64_t a);

/// Totally ramified dihedral tuple reverse-engineered from (a, a0) with the
/// smallest admissible e. Test-harness convention for sweeping profiles;
/// returns nothing when the pair admits no valid jump (a0 = 0 with 2a < p).
std::optional<RamificationData> synthetic_tuple(std::int64_t p, std::int64_t a,
                                                std::int64_t a0);

}  // namespace galord

#endif
