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
#include "galord/redmethod.hpp"

using namespace galord;

TEST_CASE("maximal model at p = 3 reduces by row exchanges only") {
  MaximalModel mm = make_maximal_model(3, {0, 1, 2});
  ReducedPair rp = reduce(maximal_action(mm));

  RatMatrix expected{{Rat(1), Rat(0), Rat(0)},
                     {Rat(1), Rat(1), Rat(1)},
                     {Rat(1), Rat(2), Rat(4)}};
  CHECK(rp.D == expected);
  CHECK(verify_certificate(rp));

  // The transformation is a bare permutation here.
  for (const RatVector& row : rp.U) {
    std::int64_t nonzero = 0;
    for (const Rat& x : row)
      if (x != 0) {
        CHECK(x == 1);
        ++nonzero;
      }
    CHECK(nonzero == 1);
  }
}

TEST_CASE("identity blocks reduce to the identity") {
  RatMatrix rows(9, RatVector(3, Rat(0)));
  for (std::int64_t j = 0; j < 3; ++j) rows[static_cast<std::size_t>(j * 3 + j)][static_cast<std::size_t>(j)] = 1;
  ReducedPair rp = reduce(make_action_matrix(3, 3, std::move(rows)));
  CHECK(rp.D == rat_identity(3));
  CHECK(verify_certificate(rp));
  std::vector<RatVector> basis = basis_from_reduced(rp);
  for (std::int64_t i = 0; i < 3; ++i)
    for (std::int64_t l = 0; l < 3; ++l)
      CHECK(basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] ==
            Rat(i == l ? 1 : 0));
}

TEST_CASE("rank-deficient stacks are rejected") {
  RatMatrix rows(9, RatVector(3, Rat(0)));
  rows[0][0] = 1;
  rows[3][0] = 5;
  rows[6][1] = 2;
  try {
    reduce(make_action_matrix(3, 3, std::move(rows)));
    FAIL("expected RankDeficient");
  } catch (const Error& err) {
    CHECK(err.code() == errc::rank_deficient);
  }
}

TEST_CASE("denominators divisible by p are rejected") {
  RatMatrix rows(1, RatVector(1, Rat(1, 3)));
  CHECK_THROWS_AS(make_action_matrix(3, 1, std::move(rows)), Error);
}

TEST_CASE("pivot exchange keeps the lattice") {
  // Row (3,0) enters first; (1,0) has the dependency (1/3)*(3,0), which is
  // not 3-integral, so the later row must replace it as pivot.
  RatMatrix rows(4, RatVector(2, Rat(0)));
  rows[0][0] = 3;
  rows[1][0] = 1;
  rows[2][1] = 9;
  rows[3][1] = 27;
  ReducedPair rp = reduce(make_action_matrix(3, 2, std::move(rows)));
  CHECK(rp.D[0][0] == 1);
  CHECK(rp.D[0][1] == 0);
  CHECK(rp.D[1][0] == 0);
  CHECK(rp.D[1][1] == 9);
  CHECK(verify_certificate(rp));
}

TEST_CASE("delta action and idempotents at p = 5") {
  MaximalModel mm = make_maximal_model(5, {0, 1, 2, 3, 4});
  ReducedPair rp = reduce(maximal_action(mm));
  RatMatrix lam = vandermonde(mm);
  CHECK(rp.D == lam);

  std::vector<RatVector> basis = basis_from_reduced(rp);
  RatMatrix omega = rat_inverse(lam);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t l = 0; l < 5; ++l) CHECK(basis[i][l] == omega[l][i]);

  // v_i acts on the j-th generator by delta_ij, all 25 pairs.
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Rat scalar(0);
      for (std::size_t l = 0; l < 5; ++l) scalar += lam[j][l] * basis[i][l];
      scalar.canonicalize();
      CHECK(scalar == Rat(i == j ? 1 : 0));
    }

  CHECK(idempotent_check(mm));
  CHECK(idempotent_check(make_maximal_model(3, {0, 1, 2})));
  CHECK(idempotent_check(make_maximal_model(5, {0, 6, 2, 13, 4})));
}

TEST_CASE("repeated eigenvalues are rejected") {
  CHECK_THROWS_AS(make_maximal_model(5, {0, 1, 1, 2, 3}), Error);
  CHECK_THROWS_AS(make_maximal_model(5, {0, 1, 6, 2, 3}), Error);  // 1 = 6 mod 5
  CHECK_THROWS_AS(make_maximal_model(5, {1, 2, 3, 4, 0}), Error);  // lambda_0
  CHECK_THROWS_AS(make_maximal_model(5, {0, 5, 1, 2, 3}), Error);  // non-unit
}
