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
#include "galord/verdict.hpp"

#include "galord/cfrac.hpp"
#include "galord/errors.hpp"

namespace galord {

const char* verdict_case_name(VerdictCase c) {
  switch (c) {
    case VerdictCase::MaximalA0: return "maximal_a0";
    case VerdictCase::DividesPm1: return "divides_pm1";
    case VerdictCase::DividesPm1Converse: return "divides_pm1_converse";
    case VerdictCase::ContinuedFractionLen: return "cf_length";
    case VerdictCase::NonTotRamDelegated: return "nontot_delegated";
  }
  return "unknown";
}

namespace {

std::string length_reason(std::int64_t n, bool free) {
  return "cf_length_" + std::to_string(n) + (free ? "_le_4" : "_gt_4");
}

// Divisibility always implies a short expansion: p-1 = d*a gives
// a/p = [0; d, a] (or [0; p] when a = 1), so the two high-band routes can
// never disagree.
void assert_divisibility_consistency(std::int64_t a, std::int64_t p,
                                     std::int64_t cf_length) {
  if (a != 0 && (p - 1) % a == 0 && cf_length > 2)
    raise(errc::internal, "a | p-1 must force an expansion of length <= 2");
}

}  // namespace

Verdict dihedral_verdict(const RamificationData& rd) {
  if (!rd.dihedral_totally_ramified())
    raise(errc::parameter,
          "dihedral_verdict requires totally ramified dihedral data");

  Verdict v;
  v.p = rd.p;
  v.e = rd.e;
  v.t = rd.t;
  v.a = rd.a;

  if (rd.a == 0) {
    v.free = true;
    v.vcase = VerdictCase::MaximalA0;
    v.reason = "a_zero_maximal_order";
    return v;
  }

  v.cf_length = cf_expand(rd.a, rd.p).length();
  assert_divisibility_consistency(rd.a, rd.p, v.cf_length);

  if (classify(rd) == CaseTag::HighBand) {
    v.free = v.cf_length <= 4;
    v.vcase = VerdictCase::ContinuedFractionLen;
    v.reason = length_reason(v.cf_length, v.free);
  } else {
    v.free = (rd.p - 1) % rd.a == 0;
    v.vcase = v.free ? VerdictCase::DividesPm1 : VerdictCase::DividesPm1Converse;
    v.reason = v.free ? "a_divides_p_minus_1" : "a_not_divides_p_minus_1";
  }
  return v;
}

Verdict cyclic_verdict(std::int64_t p, std::int64_t e_abs, std::int64_t t) {
  RamificationData rd = validate(p, e_abs, t, Closure::Cyclic, true);

  Verdict v;
  v.p = p;
  v.e = e_abs;
  v.t = t;
  v.a = rd.a;

  if (rd.a == 0) {
    v.free = true;
    v.vcase = VerdictCase::MaximalA0;
    v.reason = "a_zero_maximal_order";
    return v;
  }

  v.cf_length = cf_expand(rd.a, p).length();
  assert_divisibility_consistency(rd.a, p, v.cf_length);

  // Almost maximal: t >= pe/(p-1) - 1, compared without division.
  if ((t + 1) * (p - 1) >= p * e_abs) {
    v.free = v.cf_length <= 4;
    v.vcase = VerdictCase::ContinuedFractionLen;
    v.reason = length_reason(v.cf_length, v.free);
  } else {
    v.free = (p - 1) % rd.a == 0;
    v.vcase = v.free ? VerdictCase::DividesPm1 : VerdictCase::DividesPm1Converse;
    v.reason = v.free ? "a_divides_p_minus_1" : "a_not_divides_p_minus_1";
  }
  return v;
}

Verdict nontot_verdict(std::int64_t p, std::int64_t e_abs, std::int64_t t) {
  // Validate under the dihedral non-totally-ramified regime, then decide by
  // the cyclic rule for the same jump.
  validate(p, e_abs, t, Closure::Dihedral, false);
  Verdict v = cyclic_verdict(p, e_abs, t);
  v.vcase = VerdictCase::NonTotRamDelegated;
  v.reason = "delegated_cyclic:" + v.reason;
  return v;
}

}  // namespace galord
