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

// Acceptance suite. Each criterion prints one pass/fail line; the binary
// exits nonzero if any criterion fails its exact check or its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "galord/assocorder.hpp"
#include "galord/cfrac.hpp"
#include "galord/errors.hpp"
#include "galord/groupring.hpp"
#include "galord/patterns.hpp"
#include "galord/redmethod.hpp"
#include "galord/verdict.hpp"
#include "galord/verify.hpp"

using namespace galord;

namespace {

struct Criterion {
  std::string description;
  double budget_ms;
  bool (*run)(std::string& note);
};

bool fail(std::string& note, const std::string& why) {
  note = why;
  return false;
}

// 1. Reference tuple: the dihedral side is not free with expansion
//    [0;1,1,1,1,2] of length 5, the cyclic side with e_abs = 4 is free.
bool crit_reference(std::string& note) {
  Verdict d = dihedral_verdict(validate(13, 2, 3, Closure::Dihedral, true));
  if (d.free || d.cf_length != 5) return fail(note, "dihedral side wrong");
  if (cf_expand(8, 13).partials !=
      std::vector<std::int64_t>{0, 1, 1, 1, 1, 2})
    return fail(note, "expansion of 8/13 wrong");
  Verdict c = cyclic_verdict(13, 4, 3);
  if (!c.free) return fail(note, "cyclic side wrong");
  return true;
}

// 2. Absolutely unramified: every valid totally ramified dihedral jump with
//    e = 1 is free, for all primes up to 97 (p = 3 includes the maximal
//    jump t = 3).
bool crit_unramified(std::string& note) {
  bool saw_p3_max = false;
  for (std::int64_t p : odd_primes_up_to(97))
    for (std::int64_t t = 1; t * (p - 1) <= 2 * p; t += 2) {
      if (t % p == 0 && t * (p - 1) != 2 * p) continue;
      RamificationData rd = validate(p, 1, t, Closure::Dihedral, true);
      if (p == 3 && t == 3) saw_p3_max = true;
      if (!dihedral_verdict(rd).free)
        return fail(note, "not free at p=" + std::to_string(p) +
                              ", t=" + std::to_string(t));
    }
  if (!saw_p3_max) return fail(note, "p=3 maximal jump never enumerated");
  return true;
}

// 3. Weakly ramified with e > 1: free exactly at p = 3.
bool crit_weakly_ramified(std::string& note) {
  for (std::int64_t p : odd_primes_up_to(97))
    for (std::int64_t e = 2; e <= 10; ++e) {
      Verdict v = dihedral_verdict(validate(p, e, 1, Closure::Dihedral, true));
      if (v.free != (p == 3))
        return fail(note, "p=" + std::to_string(p) + ", e=" + std::to_string(e));
    }
  return true;
}

// 4. Group-ring identities: the degree-p reduction vanishes for p <= 23,
//    both closed forms of c_j agree with v_p(c_j) = 1 for p <= 101, and the
//    odd-power change of basis inverts and ends in the c_j for p <= 23.
bool crit_groupring(std::string& note) {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23})
    if (!verify_wp_identity(p))
      return fail(note, "identity fails at p=" + std::to_string(p));
  try {
    for (std::int64_t p : odd_primes_up_to(101)) wp_reduction_coeffs(p);
    for (std::int64_t p : odd_primes_up_to(23)) ab_matrices(p);
  } catch (const Error& err) {
    return fail(note, err.what());
  }
  return true;
}

// 5. Running-minima set: scan and convergent parametrization agree for all
//    primes p < 300 and every numerator.
bool crit_eset(std::string& note) {
  for (std::int64_t p : odd_primes_up_to(299))
    for (std::int64_t a = 1; a < p; ++a)
      if (e_set_bruteforce(a, p).members != e_set_parametrized(a, p).members)
        return fail(note,
                    "a=" + std::to_string(a) + ", p=" + std::to_string(p));
  return true;
}

// 6. Order exponents: the min formula and the E-set formula agree for all
//    primes p < 200 and every valid (a, a0) with a0 in {0,1,2}.
bool crit_n_dual(std::string& note) {
  for (std::int64_t p : odd_primes_up_to(199))
    for (std::int64_t a = 1; a < p; ++a) {
      ESet es = e_set_bruteforce(a, p);
      for (std::int64_t a0 = 0; a0 <= 2; ++a0) {
        auto rd = synthetic_tuple(p, a, a0);
        if (!rd) continue;
        if (n_sequence_min(*rd) != n_sequence_eps(*rd, es))
          return fail(note, "p=" + std::to_string(p) +
                                ", a=" + std::to_string(a) +
                                ", a0=" + std::to_string(a0));
      }
    }
  return true;
}

// 7. Ring conditions: the wrapped condition holds unconditionally, the plain
//    one exactly when a | p-1, and order equality tracks both.
bool crit_ring_conditions(std::string& note) {
  for (std::int64_t p : odd_primes_up_to(99))
    for (std::int64_t a = 1; a < p; ++a) {
      auto rd = synthetic_tuple(p, a, (2 * a > p) ? 0 : 1);
      if (!rd) return fail(note, "no tuple for a=" + std::to_string(a));
      RingConditionReport rep = ring_conditions(*rd);
      bool divides = (p - 1) % a == 0;
      if (!rep.cond2 || rep.cond1 != divides ||
          orders_equal(*rd) != (rep.cond1 && rep.cond2))
        return fail(note,
                    "p=" + std::to_string(p) + ", a=" + std::to_string(a));
    }
  return true;
}

// 8. High-band certificates: for every high-band profile with p < 50 and
//    expansion length >= 3, exactly one of the two certificate routines
//    succeeds and the winner matches the length criterion; the reference
//    tuple yields the certificate (columns {3,6,9}, rows {7,10}, deficit 1).
bool crit_patterns(std::string& note) {
  for (std::int64_t p : odd_primes_up_to(49))
    for (std::int64_t a = 1; a < p; ++a) {
      RamificationData rd = high_band_tuple(p, a);
      OrderProfile profile = make_order_profile(rd);
      std::int64_t n = cf_expand(a, p).length();

      bool suff = false, nec = false;
      try {
        sufficiency_check(profile);
        suff = true;
      } catch (const Error& err) {
        if (err.code() != errc::precondition_violated)
          return fail(note, std::string("sufficiency: ") + err.what());
      }
      try {
        necessity_check(profile);
        nec = true;
      } catch (const Error& err) {
        if (err.code() != errc::precondition_violated)
          return fail(note, std::string("necessity: ") + err.what());
      }

      std::string where = "p=" + std::to_string(p) + ", a=" + std::to_string(a);
      if (n <= 2) {
        if (suff || nec || !orders_equal(rd))
          return fail(note, where + " (short expansion)");
      } else if (suff == nec) {
        return fail(note, where + " (not exactly one certificate)");
      } else if (suff != (n <= 4)) {
        return fail(note, where + " (certificate against length rule)");
      } else if (dihedral_verdict(rd).free != (n <= 4)) {
        return fail(note, where + " (verdict against length rule)");
      }
    }

  NecessityCertificate cert = necessity_check(
      make_order_profile(validate(13, 2, 3, Closure::Dihedral, true)));
  std::set<std::int64_t> cols(cert.columns.begin(), cert.columns.end());
  if (cols != std::set<std::int64_t>{3, 6, 9} ||
      cert.allowed_rows != std::vector<std::int64_t>{7, 10} ||
      cert.cover_deficit != 1)
    return fail(note, "reference certificate wrong");
  return true;
}

// 9. Reduction method: 100 seeded random maximal models over p in {3,5,7};
//    the reduction certificate verifies, the extracted basis acts by
//    delta_ij, and the idempotent check passes.
bool crit_redmethod(std::string& note) {
  std::mt19937_64 rng(20260314);
  const std::vector<std::int64_t> primes = {3, 5, 7};
  for (int trial = 0; trial < 100; ++trial) {
    std::int64_t p = primes[static_cast<std::size_t>(trial % 3)];
    std::vector<std::int64_t> lambdas(static_cast<std::size_t>(p));
    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < p; ++u) units.push_back(u);
    std::shuffle(units.begin(), units.end(), rng);
    std::uniform_int_distribution<std::int64_t> lift(0, 2);
    for (std::int64_t j = 1; j < p; ++j)
      lambdas[static_cast<std::size_t>(j)] =
          units[static_cast<std::size_t>(j - 1)] + p * lift(rng);
    MaximalModel mm = make_maximal_model(p, std::move(lambdas));

    ReducedPair rp = reduce(maximal_action(mm));
    if (!verify_certificate(rp))
      return fail(note, "certificate at trial " + std::to_string(trial));

    RatMatrix lam = vandermonde(mm);
    std::vector<RatVector> basis = basis_from_reduced(rp);
    for (std::int64_t i = 0; i < p; ++i)
      for (std::int64_t j = 0; j < p; ++j) {
        Rat scalar(0);
        for (std::int64_t l = 0; l < p; ++l)
          scalar +=
              lam[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] *
              basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        scalar.canonicalize();
        if (scalar != Rat(i == j ? 1 : 0))
          return fail(note, "delta action at trial " + std::to_string(trial));
      }

    if (!idempotent_check(mm))
      return fail(note, "idempotents at trial " + std::to_string(trial));
  }
  return true;
}

// 10. Best-approximation facts for the convergents and the six valuation
//     profile facts, over every synthetic tuple with p < 200.
bool crit_invariants(std::string& note) {
  for (std::int64_t p : odd_primes_up_to(199)) {
    for (std::int64_t a = 1; a < p; ++a) {
      ContinuedFraction cf = cf_expand(a, p);
      const std::int64_t n = cf.length();
      auto q = [&](std::int64_t i) {
        return cf.convergents[static_cast<std::size_t>(i)].second;
      };
      auto pn = [&](std::int64_t i) {
        return cf.convergents[static_cast<std::size_t>(i)].first;
      };
      auto err_num = [&](std::int64_t i) {
        return std::abs(q(i) * a - pn(i) * p);
      };
      auto dist = [&](std::int64_t x) {
        std::int64_t r = ((x * a) % p + p) % p;
        return std::min(r, p - r);
      };
      std::string where = "p=" + std::to_string(p) + ", a=" + std::to_string(a);
      for (std::int64_t i = 0; i <= n - 1; ++i)
        if (err_num(i + 1) >= err_num(i))
          return fail(note, where + " (error chain)");
      for (std::int64_t i = 1; i <= n - 1; ++i)
        if (err_num(i) != dist(q(i)))
          return fail(note, where + " (error vs distance)");
      for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t qq = 1; qq < q(i); ++qq)
          if (dist(qq) < dist(q(i - 1)))
            return fail(note, where + " (best approximation)");
      for (std::int64_t i = 1; i <= n - 1; ++i) {
        std::int64_t fr = ((q(i) * a) % p + p) % p;
        if (i % 2 == 0 ? 2 * fr >= p : 2 * fr <= p)
          return fail(note, where + " (side alternation)");
      }
      if (dist(q(n - 1)) != 1) return fail(note, where + " (last distance)");

      for (std::int64_t a0 = 0; a0 <= 2; ++a0) {
        auto rd = synthetic_tuple(p, a, a0);
        if (!rd) continue;
        std::vector<std::int64_t> nu = nu_sequence(*rd);
        const std::int64_t e = rd->e;
        if (nu.back() != a + (p - 1) * a0) return fail(note, where + " (top)");
        if (2 * nu.back() > 2 * e + p - 1) return fail(note, where + " (cap)");
        for (std::int64_t k = 0; k + 2 <= p - 1; ++k) {
          std::int64_t gap = nu[static_cast<std::size_t>(k + 2)] -
                             nu[static_cast<std::size_t>(k)];
          if (gap < 1 || (a0 > 0 && gap < 2))
            return fail(note, where + " (two-step growth)");
        }
        if (nu[static_cast<std::size_t>(p - 1)] -
                    nu[static_cast<std::size_t>(p - 2)] <
                1 ||
            nu[static_cast<std::size_t>(p - 2)] -
                    nu[static_cast<std::size_t>(p - 3)] <
                1)
          return fail(note, where + " (tail growth)");
        for (std::int64_t s = 0; s <= p - 2; ++s)
          if (nu[static_cast<std::size_t>(s)] >= e + (s + 1) / 2)
            return fail(note, where + " (strict cap)");
      }
    }
  }
  return true;
}

// 11. Scaffold identity c = l*p + a with l >= 0, and l > 0 exactly in the
//     low band, over the same enumeration.
bool crit_scaffold(std::string& note) {
  for (std::int64_t p : odd_primes_up_to(199))
    for (std::int64_t a = 1; a < p; ++a)
      for (std::int64_t a0 = 0; a0 <= 2; ++a0) {
        auto rd = synthetic_tuple(p, a, a0);
        if (!rd) continue;
        auto [c, l] = scaffold_precision(*rd);
        if (c != l * p + a || l < 0 ||
            (l > 0) != (classify(*rd) == CaseTag::LowBand))
          return fail(note, "p=" + std::to_string(p) +
                                ", a=" + std::to_string(a) +
                                ", a0=" + std::to_string(a0));
      }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"reference verdicts (p=13 pair) reproduce exactly", 10, crit_reference},
      {"absolutely unramified sweep is all free (p <= 97)", 1000,
       crit_unramified},
      {"weakly ramified sweep free iff p = 3 (e in 2..10)", 1000,
       crit_weakly_ramified},
      {"group-ring reduction identities (p <= 23, c_j <= 101)", 5000,
       crit_groupring},
      {"running-minima set dual construction (p < 300)", 10000, crit_eset},
      {"order exponent dual formulas (p < 200)", 10000, crit_n_dual},
      {"ring conditions match divisibility (p < 100)", 5000,
       crit_ring_conditions},
      {"high-band certificates follow the length rule (p < 50)", 30000,
       crit_patterns},
      {"reduction method delta action, 100 seeded trials", 5000,
       crit_redmethod},
      {"convergent and valuation-profile invariants (p < 200)", 10000,
       crit_invariants},
      {"scaffold identity and band split (p < 200)", 5000, crit_scaffold},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& crit = criteria[i];
    std::string note;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = crit.run(note);
    } catch (const std::exception& err) {
      note = err.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    bool in_budget = ms < crit.budget_ms;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %2zu: %s  %-55s (%.2f ms / %.0f ms)%s%s\n", i + 1,
                pass ? "PASS" : "FAIL", crit.description.c_str(), ms,
                crit.budget_ms, note.empty() ? "" : " — ", note.c_str());
    if (ok && !in_budget) std::printf("              over time budget\n");
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
