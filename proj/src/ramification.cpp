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
#include "galord/ramification.hpp"

#include <numeric>
#include <string>

#include "galord/errors.hpp"
#include "galord/numutil.hpp"

namespace galord {

RamificationData validate(std::int64_t p, std::int64_t e, std::int64_t t,
                          Closure closure, bool totally_ramified) {
  if (p >= (std::int64_t{1} << 31))
    raise(errc::parameter, "p too large (must be < 2^31)");
  if (!is_odd_prime(p))
    raise(errc::parameter, "p = " + std::to_string(p) + " is not an odd prime");
  if (e < 1) raise(errc::parameter, "e must be >= 1");
  if (t < 1) raise(errc::out_of_range, "jump t must be >= 1");

  RamificationData rd;
  rd.p = p;
  rd.e = e;
  rd.t = t;
  rd.closure = closure;
  rd.totally_ramified = (closure == Closure::Cyclic) ? true : totally_ramified;

  if (rd.dihedral_totally_ramified()) {
    if (t % 2 == 0)
      raise(errc::parity_violation,
            "jump t must be odd for a totally ramified dihedral closure");
    // t <= 2pe/(p-1), with equality exactly when p | t.
    if (t * (p - 1) > 2 * p * e)
      raise(errc::out_of_range, "jump t exceeds 2pe/(p-1)");
    if (t % p == 0 && t * (p - 1) != 2 * p * e)
      raise(errc::divisibility_violation,
            "p divides t but t is not at the maximal bound 2pe/(p-1)");
    rd.ell = (p + t) / 2;
  } else {
    // Cyclic jump (also the delegated jump of the non-totally-ramified
    // dihedral case): bound pe/(p-1), equality exactly when p | t.
    if (t * (p - 1) > p * e)
      raise(errc::out_of_range, "jump t exceeds pe/(p-1)");
    if (t % p == 0 && t * (p - 1) != p * e)
      raise(errc::divisibility_violation,
            "p divides t but t is not at the maximal bound pe/(p-1)");
    rd.ell = t;
  }

  rd.a = pos_mod(rd.ell, p);
  rd.a0 = floor_div(rd.ell, p);
  return rd;
}

CaseTag classify(const RamificationData& rd) {
  if (!rd.dihedral_totally_ramified())
    raise(errc::parameter,
          "classification applies to totally ramified dihedral data only");
  if (rd.a == 0) return CaseTag::MaximalA0;
  // nu_{p-1} from its defining floor; the profile module cross-checks the
  // closed form a + (p-1) a0 against this.
  std::int64_t nu_last = floor_div(rd.a + (rd.p - 1) * rd.ell, rd.p);
  return (2 * nu_last == 2 * rd.e + rd.p - 1) ? CaseTag::HighBand
                                              : CaseTag::LowBand;
}

bool existence_check(std::int64_t p, std::int64_t e0, std::int64_t t,
                     bool m_ramified) {
  if (!is_odd_prime(p)) raise(errc::parameter, "p must be an odd prime");
  if (e0 < 1) raise(errc::parameter, "e0 must be >= 1");
  if (t < 1) return false;
  if (t * (p - 1) == p * e0) return true;
  if (t * (p - 1) > p * e0) return false;
  if (std::gcd(t, p) != 1) return false;
  if (m_ramified && t % 2 == 0) return false;
  return true;
}

}  // namespace galord
