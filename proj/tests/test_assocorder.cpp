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

#include "galord/assocorder.hpp"
#include "galord/errors.hpp"
#include "galord/verify.hpp"

using namespace galord;

namespace {

RamificationData tuple13() { return validate(13, 2, 3, Closure::Dihedral, true); }

}  // namespace

TEST_CASE("nu sequence") {
  CHECK(nu_sequence(tuple13()) ==
        std::vector<std::int64_t>{0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8});
  CHECK(nu_sequence(tuple13()).back() == 8);  // a + 12 a0
  CHECK(nu_sequence(validate(7, 2, 1, Closure::Dihedral, true)) ==
        std::vector<std::int64_t>{0, 1, 1, 2, 2, 3, 4});
  CHECK_THROWS_AS(nu_sequence(validate(5, 2, 5, Closure::Dihedral, true)),
                  Error);
}

TEST_CASE("order exponents via the min formula") {
  std::vector<std::int64_t> n = n_sequence_min(tuple13());
  CHECK(n == std::vector<std::int64_t>{0, 0, 1, 1, 2, 3, 3, 4, 5, 5, 6, 7, 8});
  // n_1 attains its minimum at j = 1: nu_2 - nu_1 = 0.
  std::vector<std::int64_t> nu = nu_sequence(tuple13());
  CHECK(nu[2] - nu[1] == n[1]);
  // The top exponent has a single term j = 0.
  CHECK(n.back() == nu.back());
}

TEST_CASE("order exponents via the running-minima set") {
  RamificationData rd = tuple13();
  ESet es = e_set_bruteforce(rd.a, rd.p);
  std::vector<std::int64_t> n = n_sequence_eps(rd, es);
  CHECK(n[8] == 5);  // h = 5 is a running minimum, so the +1 applies
  CHECK(n[1] == 0);  // h = 12 is not
  CHECK(n[0] == 0);  // i = 0 takes no correction by convention
  CHECK(n == n_sequence_min(rd));
}

TEST_CASE("largest flat even window") {
  std::vector<std::int64_t> nu = nu_sequence(tuple13());
  CHECK(d_max(nu, 1) == 6);   // nu_7 = nu_1 + 3 but nu_9 > nu_1 + 4
  CHECK(d_max(nu, 2) == 0);   // nu_4 = 3 already exceeds nu_2 + 1
  CHECK(d_max(nu, 12) == 0);  // no room at the top
  CHECK_THROWS_AS(d_max(nu, 0), Error);
}

TEST_CASE("ring conditions") {
  RingConditionReport rep = ring_conditions(tuple13());
  CHECK_FALSE(rep.cond1);  // nu_1 + nu_1 = 2 > nu_2 = 1
  CHECK(rep.cond2);
  bool has11 = false;
  for (auto [i, j] : rep.violations)
    if (i == 1 && j == 1) has11 = true;
  CHECK(has11);

  RingConditionReport rep7 = ring_conditions(validate(7, 2, 1, Closure::Dihedral, true));
  CHECK_FALSE(rep7.cond1);  // a = 4 does not divide 6
  CHECK(rep7.cond2);
}

TEST_CASE("order equality criterion") {
  CHECK(orders_equal(validate(5, 2, 5, Closure::Dihedral, true)));   // a = 0
  CHECK_FALSE(orders_equal(tuple13()));                              // 8 ∤ 12
  CHECK(orders_equal(validate(3, 2, 1, Closure::Dihedral, true)));   // 2 | 2

  // Coincides with the ring conditions whenever a != 0.
  for (std::int64_t p : odd_primes_up_to(23))
    for (std::int64_t a = 1; a < p; ++a) {
      RamificationData rd = high_band_tuple(p, a);
      RingConditionReport rep = ring_conditions(rd);
      REQUIRE(orders_equal(rd) == (rep.cond1 && rep.cond2));
    }
}

TEST_CASE("scaffold precision") {
  auto [c13, l13] = scaffold_precision(tuple13());
  CHECK(c13 == 8);
  CHECK(l13 == 0);
  auto [c7, l7] = scaffold_precision(validate(7, 2, 1, Closure::Dihedral, true));
  CHECK(c7 == 11);
  CHECK(l7 == 1);
  CHECK_THROWS_AS(scaffold_precision(validate(5, 2, 5, Closure::Dihedral, true)),
                  Error);
}

TEST_CASE("assembled profile") {
  OrderProfile profile = make_order_profile(tuple13());
  CHECK(profile.nu.size() == 13);
  CHECK(profile.n.size() == 13);
  CHECK(profile.e_set.members == std::vector<std::int64_t>{1, 2, 5});
  CHECK(profile.d_max_table[1] == 6);
  CHECK(profile.scaffold_c == 8);
  CHECK(profile.scaffold_l == 0);
}
