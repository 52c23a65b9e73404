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
#ifndef GALORD_CFRAC_HPP
#define GALORD_CFRAC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "galord/numutil.hpp"

namespace galord {

/// Canonical continued fraction of a/p for an odd prime p and 0 <= a < p.
///
/// partials holds [a0; a1, ..., an] with a0 = 0 (a < p). The expansion is
/// canonical: the last partial quotient is >= 2 whenever n >= 2, so the
/// length n is unambiguous. convergents holds the coprime pairs (p_i, q_i)
/// with q_0 = 1, q_1 = a1, q_{i+2} = a_{i+2} q_{i+1} + q_i and q_n = p.
struct ContinuedFraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  std::vector<std::int64_t> partials;
  std::vector<std::pair<std::int64_t, std::int64_t>> convergents;

  /// Expansion length n (index of the last partial quotient).
  std::int64_t length() const {
    return static_cast<std::int64_t>(partials.size()) - 1;
  }
};

ContinuedFraction cf_expand(std::int64_t a, std::int64_t p);

const std::vector<std::pair<std::int64_t, std::int64_t>>& convergents(
    const ContinuedFraction& cf);

/// x - floor(x), exactly.
Rat frac_part(const Rat& x);

/// Distance of x to the nearest integer, in (0, 1/2).
/// Rejects inputs with 2x integral, where the notion is undefined.
Rat nearest_dist(const Rat& x);

/// Residues 1 <= h < p whose fractional multiple frac(h a / p) is a strict
/// running minimum over all smaller h. Always contains 1.
struct ESet {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::vector<std::int64_t> members;  // sorted

  bool contains(std::int64_t h) const;
};

/// Exact running-minimum scan of frac(h a / p), h = 1 .. p-1.
ESet e_set_bruteforce(std::int64_t a, std::int64_t p);

/// The same set built from the convergent denominators: the elements between
/// q_{2i} and q_{2i+2} are exactly a' q_{2i+1} + q_{2i}. Must agree with the
/// scan for every admissible input; the two constructions are kept as
/// independent routes on purpose.
ESet e_set_parametrized(std::int64_t a, std::int64_t p);

}  // namespace galord

#endif
