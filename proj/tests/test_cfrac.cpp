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

#include "galord/cfrac.hpp"
#include "galord/errors.hpp"

using namespace galord;

TEST_CASE("expansion of 8/13") {
  ContinuedFraction cf = cf_expand(8, 13);
  CHECK(cf.partials == std::vector<std::int64_t>{0, 1, 1, 1, 1, 2});
  CHECK(cf.length() == 5);

  std::vector<std::int64_t> qs, ps;
  for (auto [pn, qn] : convergents(cf)) {
    ps.push_back(pn);
    qs.push_back(qn);
  }
  CHECK(qs == std::vector<std::int64_t>{1, 1, 2, 3, 5, 13});
  CHECK(ps == std::vector<std::int64_t>{0, 1, 1, 2, 3, 8});
}

TEST_CASE("small expansions") {
  CHECK(cf_expand(3, 5).partials == std::vector<std::int64_t>{0, 1, 1, 2});
  CHECK(cf_expand(1, 5).partials == std::vector<std::int64_t>{0, 5});
  CHECK(cf_expand(0, 13).partials == std::vector<std::int64_t>{0});
  CHECK(cf_expand(0, 13).length() == 0);

  ContinuedFraction fifth = cf_expand(1, 5);
  CHECK(convergents(fifth) ==
        std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {1, 5}});

  ContinuedFraction four13 = cf_expand(4, 13);
  CHECK(four13.partials == std::vector<std::int64_t>{0, 3, 4});
  std::vector<std::int64_t> qs;
  for (auto [pn, qn] : convergents(four13)) qs.push_back(qn);
  CHECK(qs == std::vector<std::int64_t>{1, 3, 13});
}

TEST_CASE("expansion rejects bad denominators") {
  CHECK_THROWS_AS(cf_expand(1, 4), Error);
  CHECK_THROWS_AS(cf_expand(1, 9), Error);
  CHECK_THROWS_AS(cf_expand(5, 5), Error);
  CHECK_THROWS_AS(cf_expand(-1, 5), Error);
}

TEST_CASE("fractional part") {
  CHECK(frac_part(Rat(96, 13)) == Rat(5, 13));
  CHECK(frac_part(Rat(-1, 3)) == Rat(2, 3));
  CHECK(frac_part(Rat(4)) == 0);
}

TEST_CASE("distance to the nearest integer") {
  CHECK(nearest_dist(Rat(8, 13)) == Rat(5, 13));
  CHECK(nearest_dist(Rat(40, 13)) == Rat(1, 13));
  CHECK_THROWS_AS(nearest_dist(Rat(1, 2)), Error);
  CHECK_THROWS_AS(nearest_dist(Rat(7, 2)), Error);
  CHECK_THROWS_AS(nearest_dist(Rat(3)), Error);
}

TEST_CASE("running-minima set by scan") {
  CHECK(e_set_bruteforce(8, 13).members == std::vector<std::int64_t>{1, 2, 5});
  CHECK(e_set_bruteforce(4, 13).members ==
        std::vector<std::int64_t>{1, 4, 7, 10});
  // frac(h (p-1)/p) = (p-h)/p is strictly decreasing, so every h qualifies.
  std::vector<std::int64_t> all;
  for (std::int64_t h = 1; h < 11; ++h) all.push_back(h);
  CHECK(e_set_bruteforce(10, 11).members == all);
  CHECK_THROWS_AS(e_set_bruteforce(0, 13), Error);
}

TEST_CASE("running-minima set from convergents") {
  CHECK(e_set_parametrized(8, 13).members ==
        std::vector<std::int64_t>{1, 2, 5});
  CHECK(e_set_parametrized(4, 13).members ==
        std::vector<std::int64_t>{1, 4, 7, 10});
  CHECK(e_set_parametrized(1, 13).members == std::vector<std::int64_t>{1});
  CHECK(e_set_parametrized(1, 13).contains(1));
  CHECK_FALSE(e_set_parametrized(8, 13).contains(3));
}

TEST_CASE("the two set constructions agree everywhere small") {
  for (std::int64_t p : odd_primes_up_to(97))
    for (std::int64_t a = 1; a < p; ++a)
      REQUIRE(e_set_bruteforce(a, p).members ==
              e_set_parametrized(a, p).members);
}
