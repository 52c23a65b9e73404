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
#include "galord/assocorder.hpp"

#include <algorithm>

#include "galord/errors.hpp"
#include "galord/numutil.hpp"

namespace galord {

namespace {

void require_nondegenerate(const RamificationData& rd) {
  if (rd.a == 0)
    raise(errc::not_applicable,
          "valuation profile is degenerate in the maximal case a = 0");
}

void require_dihedral(const RamificationData& rd) {
  if (!rd.dihedral_totally_ramified())
    raise(errc::parameter, "operation requires totally ramified dihedral data");
}

}  // namespace

std::vector<std::int64_t> nu_sequence(const RamificationData& rd) {
  require_nondegenerate(rd);
  std::vector<std::int64_t> nu(static_cast<std::size_t>(rd.p));
  for (std::int64_t i = 0; i < rd.p; ++i)
    nu[static_cast<std::size_t>(i)] = floor_div(rd.a + i * rd.ell, rd.p);
  // Closed form of the top term; mismatch would mean a derived-field bug.
  if (nu.back() != rd.a + (rd.p - 1) * rd.a0)
    raise(errc::internal, "nu_{p-1} closed form mismatch");
  return nu;
}

std::vector<std::int64_t> n_sequence_min(const RamificationData& rd) {
  std::vector<std::int64_t> nu = nu_sequence(rd);
  const std::int64_t p = rd.p;
  std::vector<std::int64_t> n(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) {
    std::int64_t best = nu[static_cast<std::size_t>(i)];  // j = 0 term
    for (std::int64_t j = 1; j <= p - 1 - i; ++j)
      best = std::min(best, nu[static_cast<std::size_t>(i + j)] -
                                nu[static_cast<std::size_t>(j)]);
    n[static_cast<std::size_t>(i)] = best;
  }
  return n;
}

std::vector<std::int64_t> n_sequence_eps(const RamificationData& rd,
                                         const ESet& e_set) {
  require_nondegenerate(rd);
  if (e_set.p != rd.p || e_set.a != rd.a)
    raise(errc::parameter, "running-minima set was built for a different tuple");
  const std::int64_t p = rd.p;
  std::vector<std::int64_t> n(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) {
    std::int64_t eps = (i > 0 && e_set.contains(p - i)) ? 1 : 0;
    n[static_cast<std::size_t>(i)] =
        i * rd.a0 + floor_div(i * rd.a, p) + eps;
  }
  return n;
}

std::int64_t d_max(const std::vector<std::int64_t>& nu, std::int64_t m) {
  const std::int64_t p = static_cast<std::int64_t>(nu.size());
  if (m < 1 || m > p - 1) raise(errc::parameter, "m must lie in [1, p-1]");
  std::int64_t best = 0;
  for (std::int64_t d = 2; m + d <= p - 1; d += 2) {
    if (nu[static_cast<std::size_t>(m + d)] !=
        nu[static_cast<std::size_t>(m)] + d / 2)
      break;  // once the equality fails it fails for every larger d
    best = d;
  }
  return best;
}

RingConditionReport ring_conditions(const RamificationData& rd) {
  require_dihedral(rd);
  require_nondegenerate(rd);
  std::vector<std::int64_t> nu = nu_sequence(rd);
  const std::int64_t p = rd.p;
  const std::int64_t cap = rd.e + (p - 1) / 2;

  RingConditionReport report;
  for (std::int64_t i = 0; i < p; ++i) {
    for (std::int64_t j = 0; j < p; ++j) {
      const std::int64_t lhs = nu[static_cast<std::size_t>(i)] +
                               nu[static_cast<std::size_t>(j)];
      if (i + j <= p - 1) {
        if (lhs > nu[static_cast<std::size_t>(i + j)]) {
          report.cond1 = false;
          report.violations.emplace_back(i, j);
        }
      } else {
        if (lhs > cap + nu[static_cast<std::size_t>(i + j + 1 - p)]) {
          report.cond2 = false;
          report.violations.emplace_back(i, j);
        }
      }
    }
  }
  return report;
}

bool orders_equal(const RamificationData& rd) {
  require_dihedral(rd);
  return rd.a == 0 || (rd.p - 1) % rd.a == 0;
}

std::pair<std::int64_t, std::int64_t> scaffold_precision(
    const RamificationData& rd) {
  require_dihedral(rd);
  require_nondegenerate(rd);
  const std::int64_t c = rd.p * rd.e - (rd.p - 1) / 2 * rd.t;
  const std::int64_t nu_last = rd.a + (rd.p - 1) * rd.a0;
  const std::int64_t l = rd.e + (rd.p - 1) / 2 - nu_last;
  if (c != l * rd.p + rd.a)
    raise(errc::internal, "scaffold identity c = l*p + a failed");
  return {c, l};
}

OrderProfile make_order_profile(const RamificationData& rd) {
  require_nondegenerate(rd);
  OrderProfile profile;
  profile.rd = rd;
  profile.nu = nu_sequence(rd);
  profile.n = n_sequence_min(rd);
  profile.e_set = e_set_parametrized(rd.a, rd.p);
  profile.d_max_table.assign(static_cast<std::size_t>(rd.p), 0);
  for (std::int64_t m = 1; m <= rd.p - 1; ++m)
    profile.d_max_table[static_cast<std::size_t>(m)] = d_max(profile.nu, m);
  if (rd.dihedral_totally_ramified()) {
    auto [c, l] = scaffold_precision(rd);
    profile.scaffold_c = c;
    profile.scaffold_l = l;
  }
  return profile;
}

}  // namespace galord
