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
#ifndef GALORD_VERDICT_HPP
#define GALORD_VERDICT_HPP

#include <cstdint>
#include <string>

#include "galord/ramification.hpp"

namespace galord {

/// Decision path taken by a freeness verdict.
enum class VerdictCase {
  MaximalA0,            // a = 0: the associated order is maximal
  DividesPm1,           // free because a | p-1
  DividesPm1Converse,   // not free: low band and a does not divide p-1
  ContinuedFractionLen, // high band: decided by the expansion length
  NonTotRamDelegated,   // dihedral, not totally ramified: cyclic rule applies
};

const char* verdict_case_name(VerdictCase c);

/// Freeness decision together with the quantities that force it, so a
/// reader can recompute the decision from the record alone.
struct Verdict {
  bool free = false;
  VerdictCase vcase = VerdictCase::MaximalA0;
  std::int64_t p = 0;
  std::int64_t e = 0;
  std::int64_t t = 0;
  std::int64_t a = 0;
  std::int64_t cf_length = -1;  // set whenever a != 0
  std::string reason;
};

/// Totally ramified dihedral closure: free when a = 0; in the low band free
/// exactly when a | p-1; in the high band free exactly when the expansion of
/// a/p has length <= 4.
Verdict dihedral_verdict(const RamificationData& rd);

/// Totally ramified cyclic degree-p extension with absolute ramification
/// index e_abs and jump t: free when a = t mod p vanishes; for
/// t >= p e_abs/(p-1) - 1 decided by the expansion length; otherwise by
/// divisibility.
Verdict cyclic_verdict(std::int64_t p, std::int64_t e_abs, std::int64_t t);

/// Dihedral closure that is not totally ramified: the verdict equals the
/// cyclic verdict of the upper degree-p extension with the same jump.
Verdict nontot_verdict(std::int64_t p, std::int64_t e_abs, std::int64_t t);

}  // namespace galord

#endif
