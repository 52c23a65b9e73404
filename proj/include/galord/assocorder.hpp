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
#ifndef GALORD_ASSOCORDER_HPP
#define GALORD_ASSOCORDER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "galord/cfrac.hpp"
#include "galord/ramification.hpp"

namespace galord {

/// Valuation profile of the associated order for a tuple with a != 0.
///
/// nu[i] = floor((a + i*ell)/p) is the exponent of the i-th basis element of
/// the lattice attached to the distinguished normal-basis generator; n[i] is
/// the exponent of the i-th basis element of the associated order itself.
/// scaffold_c = p e - (p-1) t / 2 and scaffold_l = e + (p-1)/2 - nu[p-1]
/// satisfy scaffold_c = scaffold_l * p + a, with scaffold_l > 0 exactly in
/// the low band.
struct OrderProfile {
  RamificationData rd;
  std::vector<std::int64_t> nu;           // size p
  std::vector<std::int64_t> n;            // size p
  ESet e_set;                             // running-minima set of (a, p)
  std::vector<std::int64_t> d_max_table;  // index m = 1..p-1; slot 0 unused
  std::int64_t scaffold_c = 0;            // dihedral totally ramified only
  std::int64_t scaffold_l = 0;
};

/// nu_i = floor((a + i*ell)/p) = i*a0 + floor((i+1)a/p), for i = 0..p-1.
/// Degenerate (NotApplicable) when a = 0.
std::vector<std::int64_t> nu_sequence(const RamificationData& rd);

/// n_i = min over 0 <= j <= p-1-i of (nu_{i+j} - nu_j). The defining route.
std::vector<std::int64_t> n_sequence_min(const RamificationData& rd);

/// n_i = i*a0 + floor(i*a/p) + [p-i in E]. Independent closed form; must
/// agree with n_sequence_min elementwise.
std::vector<std::int64_t> n_sequence_eps(const RamificationData& rd,
                                         const ESet& e_set);

/// Largest even d >= 0 with m + d <= p-1 and nu_{m+d} = nu_m + d/2.
std::int64_t d_max(const std::vector<std::int64_t>& nu, std::int64_t m);

/// Closure of the generator lattice under multiplication, split into the two
/// index regimes. cond2 holds unconditionally; cond1 holds exactly when a
/// divides p-1.
struct RingConditionReport {
  bool cond1 = true;  // i+j <= p-1: nu_i + nu_j <= nu_{i+j}
  bool cond2 = true;  // i+j >= p:   nu_i + nu_j <= e + (p-1)/2 + nu_{i+j+1-p}
  std::vector<std::pair<std::int64_t, std::int64_t>> violations;
};

RingConditionReport ring_conditions(const RamificationData& rd);

/// Whether the associated order coincides with the generator lattice:
/// a = 0 or a | p-1.
bool orders_equal(const RamificationData& rd);

/// (scaffold_c, scaffold_l); asserts the identity scaffold_c = l*p + a.
std::pair<std::int64_t, std::int64_t> scaffold_precision(
    const RamificationData& rd);

/// Assembles the full profile (a != 0 required). For cyclic data the nu/n/E
/// parts are produced with ell = t and the scaffold fields are left at 0,
/// since the scaffold is a feature of the dihedral totally ramified case.
OrderProfile make_order_profile(const RamificationData& rd);

}  // namespace galord

#endif
