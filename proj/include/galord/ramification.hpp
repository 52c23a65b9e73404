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
#ifndef GALORD_RAMIFICATION_HPP
#define GALORD_RAMIFICATION_HPP

#include <cstdint>

namespace galord {

enum class Closure { Dihedral, Cyclic };

/// Validated ramification parameters of a degree-p extension.
///
/// p is an odd prime, e the absolute ramification index of the base field,
/// t the ramification jump. For a totally ramified dihedral closure the jump
/// is odd, bounded by 2pe/(p-1), and ell = (p+t)/2 governs the valuation
/// arithmetic. For a cyclic closure (and for the non-totally-ramified
/// dihedral case, which delegates to the cyclic jump of the upper extension)
/// the bound is pe/(p-1) and ell is t itself; the derived quantities a, a0
/// are the remainder and quotient of ell by p in both regimes, which keeps
/// every downstream formula identical.
struct RamificationData {
  std::int64_t p = 0;
  std::int64_t e = 0;
  std::int64_t t = 0;
  Closure closure = Closure::Dihedral;
  bool totally_ramified = true;

  // derived
  std::int64_t ell = 0;
  std::int64_t a = 0;   // ell mod p
  std::int64_t a0 = 0;  // floor(ell / p)

  bool dihedral_totally_ramified() const {
    return closure == Closure::Dihedral && totally_ramified;
  }
};

/// Which branch of the freeness theorem applies.
///  - MaximalA0: a = 0, the associated order is maximal.
///  - HighBand:  nu_{p-1} = e + (p-1)/2; the continued-fraction length decides.
///  - LowBand:   anything else; divisibility of p-1 by a decides.
enum class CaseTag { MaximalA0, HighBand, LowBand };

/// Validates a raw tuple and fills in the derived quantities.
/// Throws Error with code OutOfRange / ParityViolation /
/// DivisibilityViolation / Parameter.
RamificationData validate(std::int64_t p, std::int64_t e, std::int64_t t,
                          Closure closure, bool totally_ramified);

/// Case selection for a validated totally ramified dihedral tuple. The test
/// is the exact equality nu_{p-1} = e + (p-1)/2, which is sharp at every p;
/// the equivalent jump threshold needs a correction at p = 3.
CaseTag classify(const RamificationData& rd);

/// Whether a dihedral degree-2p extension with the given data exists over
/// some quadratic base with ramification index e0 over the p-adic rationals:
/// either t sits exactly at p e0/(p-1), or t < p e0/(p-1) is coprime to p
/// and odd whenever the quadratic subextension is ramified.
bool existence_check(std::int64_t p, std::int64_t e0, std::int64_t t,
                     bool m_ramified);

}  // namespace galord

#endif
