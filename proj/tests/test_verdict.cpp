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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galord/errors.hpp"
#include "galord/verdict.hpp"

using namespace galord;

TEST_CASE("totally ramified dihedral verdicts") {
  Verdict ref = dihedral_verdict(validate(13, 2, 3, Closure::Dihedral, true));
  CHECK_FALSE(ref.free);
  CHECK(ref.vcase == VerdictCase::ContinuedFractionLen);
  CHECK(ref.cf_length == 5);

  for (std::int64_t p : {5, 7, 11, 13, 37}) {
    Verdict unram = dihedral_verdict(validate(p, 1, 1, Closure::Dihedral, true));
    CHECK(unram.free);
    CHECK(unram.cf_length == 3);  // (p+1)/2 over p is [0;1,1,(p-1)/2]
  }

  Verdict weak = dihedral_verdict(validate(7, 2, 1, Closure::Dihedral, true));
  CHECK_FALSE(weak.free);
  CHECK(weak.vcase == VerdictCase::DividesPm1Converse);

  Verdict maximal = dihedral_verdict(validate(5, 2, 5, Closure::Dihedral, true));
  CHECK(maximal.free);
  CHECK(maximal.vcase == VerdictCase::MaximalA0);

  CHECK_THROWS_AS(dihedral_verdict(validate(13, 4, 3, Closure::Cyclic, true)),
                  Error);
}

TEST_CASE("cyclic verdicts") {
  Verdict ref = cyclic_verdict(13, 4, 3);
  CHECK(ref.free);
  CHECK(ref.vcase == VerdictCase::DividesPm1);

  Verdict maximal = cyclic_verdict(13, 12, 13);
  CHECK(maximal.free);
  CHECK(maximal.vcase == VerdictCase::MaximalA0);

  // At the almost-maximal boundary both routes apply and agree.
  Verdict boundary = cyclic_verdict(5, 4, 4);
  CHECK(boundary.free);
  CHECK(boundary.vcase == VerdictCase::ContinuedFractionLen);
  CHECK(boundary.cf_length == 2);

  CHECK_THROWS_AS(cyclic_verdict(13, 4, 9), Error);  // bound is 52/12
}

TEST_CASE("non-totally-ramified dihedral verdicts delegate") {
  for (std::int64_t p : {5, 7, 11, 13}) {
    Verdict v = nontot_verdict(p, 1, 1);
    CHECK(v.free);
    CHECK(v.vcase == VerdictCase::NonTotRamDelegated);
  }
  Verdict big = nontot_verdict(13, 12, 12);
  CHECK(big.free);
  Verdict max = nontot_verdict(13, 12, 13);
  CHECK(max.free);
  CHECK(max.a == 0);
  CHECK(max.vcase == VerdictCase::NonTotRamDelegated);
}

TEST_CASE("divisibility always implies freeness") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    for (std::int64_t e = 1; e <= 6; ++e)
      for (std::int64_t t = 1; t * (p - 1) <= 2 * p * e; t += 2) {
        if (t % p == 0 && t * (p - 1) != 2 * p * e) continue;
        RamificationData rd = validate(p, e, t, Closure::Dihedral, true);
        if (rd.a != 0 && (p - 1) % rd.a == 0)
          CHECK(dihedral_verdict(rd).free);
      }
  }
}
