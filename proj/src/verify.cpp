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
#include "galord/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "galord/assocorder.hpp"
#include "galord/cfrac.hpp"
#include "galord/errors.hpp"
#include "galord/groupring.hpp"
#include "galord/patterns.hpp"
#include "galord/redmethod.hpp"
#include "galord/verdict.hpp"

namespace galord {

bool SuiteReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::format() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << checks.size() << " checks\n";
  for (const CheckResult& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << " — " << c.detail;
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> suite_names() {
  return {"cfrac", "assocorder", "groupring", "redmethod", "patterns", "all"};
}

RamificationData high_band_tuple(std::int64_t p, std::int64_t a) {
  const std::int64_t a0 = (2 * a > p) ? 0 : 1;
  const std::int64_t e = a + (p - 1) * a0 - (p - 1) / 2;
  const std::int64_t t = (2 * a0 - 1) * p + 2 * a;
  return validate(p, e, t, Closure::Dihedral, true);
}

std::optional<RamificationData> synthetic_tuple(std::int64_t p, std::int64_t a,
                                                std::int64_t a0) {
  const std::int64_t t = (2 * a0 - 1) * p + 2 * a;
  if (t < 1) return std::nullopt;
  std::int64_t e = (t * (p - 1) + 2 * p - 1) / (2 * p);  // ceil(t(p-1)/2p)
  if (e < 1) e = 1;
  return validate(p, e, t, Closure::Dihedral, true);
}

namespace {

std::string tuple_tag(const RamificationData& rd) {
  std::ostringstream out;
  out << "(p=" << rd.p << ", e=" << rd.e << ", t=" << rd.t << ")";
  return out.str();
}

// Distance to the nearest integer extended to integers (distance 0), as a
// numerator over p. Used only by sweeps that must cross the q_n = p boundary.
std::int64_t dist_num(std::int64_t x, std::int64_t a, std::int64_t p) {
  std::int64_t r = pos_mod(x * a, p);
  return std::min(r, p - r);
}

CheckResult check_cf_canonical(std::int64_t max_p) {
  CheckResult res{"continued fractions are canonical and reconstruct", true, ""};
  std::int64_t tuples = 0;
  for (std::int64_t p : odd_primes_up_to(max_p)) {
    for (std::int64_t a = 0; a < p; ++a) {
      ContinuedFraction cf = cf_expand(a, p);
      ++tuples;
      // Reconstruct a/p by folding the partial quotients from the tail.
      Rat value(0);
      for (std::size_t i = cf.partials.size(); i-- > 0;) {
        if (value != 0) value = 1 / value;
        value += cf.partials[i];
        value.canonicalize();
      }
      bool ok = (a == 0) ? (value == 0) : (value == Rat(a, p));
      const auto& conv = cf.convergents;
      for (std::size_t i = 0; ok && i < conv.size(); ++i) {
        if (std::gcd(conv[i].first, conv[i].second) != 1) ok = false;
        if (i >= 2 && conv[i].second != cf.partials[i] * conv[i - 1].second +
                                            conv[i - 2].second)
          ok = false;
      }
      if (conv.back().second != p && a != 0) ok = false;
      if (cf.length() >= 2 && cf.partials.back() < 2) ok = false;
      if (!ok) {
        res.pass = false;
        res.detail = "a=" + std::to_string(a) + ", p=" + std::to_string(p);
        return res;
      }
    }
  }
  res.detail = std::to_string(tuples) + " expansions";
  return res;
}

CheckResult check_cf_best_approx(std::int64_t max_p) {
  CheckResult res{"convergents are best approximations", true, ""};
  for (std::int64_t p : odd_primes_up_to(max_p)) {
    for (std::int64_t a = 1; a < p; ++a) {
      ContinuedFraction cf = cf_expand(a, p);
      const std::int64_t n = cf.length();
      auto q = [&](std::int64_t i) {
        return cf.convergents[static_cast<std::size_t>(i)].second;
      };
      auto pnum = [&](std::int64_t i) {
        return cf.convergents[static_cast<std::size_t>(i)].first;
      };
      // Approximation error |q_i a/p - p_i| as a numerator over p. Equals
      // the nearest-integer distance for i >= 1; at i = 0 the nearest
      // integer may sit on the other side.
      auto err_num = [&](std::int64_t i) {
        return std::abs(q(i) * a - pnum(i) * p);
      };
      bool ok = true;
      // (1) strict decrease of the approximation errors, ending at 0.
      for (std::int64_t i = 0; ok && i <= n - 1; ++i)
        if (err_num(i + 1) >= err_num(i)) ok = false;
      if (err_num(n) != 0) ok = false;
      for (std::int64_t i = 1; ok && i <= n - 1; ++i)
        if (err_num(i) != dist_num(q(i), a, p)) ok = false;
      // (2) nothing below q_i beats q_{i-1}.
      for (std::int64_t i = 1; ok && i <= n; ++i)
        for (std::int64_t qq = 1; qq < q(i); ++qq)
          if (dist_num(qq, a, p) < dist_num(q(i - 1), a, p)) {
            ok = false;
            break;
          }
      // (3) the side of the nearest integer alternates with the index.
      for (std::int64_t i = 1; ok && i <= n - 1; ++i) {
        std::int64_t fr = pos_mod(q(i) * a, p);  // frac = fr/p
        if (i % 2 == 0 ? 2 * fr >= p : 2 * fr <= p) ok = false;
      }
      // (4) the last proper convergent lands at distance exactly 1/p.
      if (ok && dist_num(q(n - 1), a, p) != 1) ok = false;
      if (!ok) {
        res.pass = false;
        res.detail = "a=" + std::to_string(a) + ", p=" + std::to_string(p);
        return res;
      }
    }
  }
  return res;
}

CheckResult check_eset_equivalence(std::int64_t max_p) {
  CheckResult res{"running-minima set: scan equals convergent form", true, ""};
  std::int64_t cases = 0;
  for (std::int64_t p : odd_primes_up_to(max_p)) {
    for (std::int64_t a = 1; a < p; ++a) {
      ++cases;
      if (e_set_bruteforce(a, p).members != e_set_parametrized(a, p).members) {
        res.pass = false;
        res.detail = "a=" + std::to_string(a) + ", p=" + std::to_string(p);
        return res;
      }
    }
  }
  res.detail = std::to_string(cases) + " pairs";
  return res;
}

CheckResult check_modular_distance(std::int64_t max_p) {
  CheckResult res{"modular distance is a metric on distinct residues", true, ""};
  for (std::int64_t p : odd_primes_up_to(std::min<std::int64_t>(max_p, 23))) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t h = 0; h < p; ++h)
        for (std::int64_t k = 0; k < p; ++k) {
          std::int64_t d = dist_num(h - k, a, p);
          bool ok = (h == k) ? (d == 0) : (d > 0);
          if (d != dist_num(k - h, a, p)) ok = false;
          for (std::int64_t l = 0; ok && l < p; ++l)
            if (d > dist_num(h - l, a, p) + dist_num(l - k, a, p)) ok = false;
          if (!ok) {
            res.pass = false;
            res.detail = "a=" + std::to_string(a) + ", p=" + std::to_string(p);
            return res;
          }
        }
    }
  }
  return res;
}

CheckResult check_n_dual_formulas(std::int64_t max_p) {
  CheckResult res{"order exponents: min formula equals E-set formula", true, ""};
  std::int64_t cases = 0;
  for (std::int64_t p : odd_primes_up_to(max_p)) {
    for (std::int64_t a = 1; a < p; ++a) {
      ESet es = e_set_bruteforce(a, p);
      for (std::int64_t a0 = 0; a0 <= 2; ++a0) {
        auto rd = synthetic_tuple(p, a, a0);
        if (!rd) continue;
        ++cases;
        if (n_sequence_min(*rd) != n_sequence_eps(*rd, es)) {
          res.pass = false;
          res.detail = tuple_tag(*rd);
          return res;
        }
      }
    }
  }
  res.detail = std::to_string(cases) + " tuples";
  return res;
}

CheckResult check_profile_invariants(std::int64_t max_p) {
  CheckResult res{"valuation profile invariants", true, ""};
  for (std::int64_t p : odd_primes_up_to(max_p)) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t a0 = 0; a0 <= 2; ++a0) {
        auto rd = synthetic_tuple(p, a, a0);
        if (!rd) continue;
        OrderProfile profile = make_order_profile(*rd);
        const auto& nu = profile.nu;
        const auto& n = profile.n;
        const std::int64_t e = rd->e;
        bool ok = true;
        for (std::int64_t i = 0; i + 1 < p; ++i)
          if (nu[static_cast<std::size_t>(i)] > nu[static_cast<std::size_t>(i + 1)])
            ok = false;
        if (nu.back() != a + (p - 1) * a0) ok = false;
        if (2 * nu.back() > 2 * e + p - 1) ok = false;
        for (std::int64_t k = 0; ok && k + 2 <= p - 1; ++k) {
          std::int64_t gap = nu[static_cast<std::size_t>(k + 2)] -
                             nu[static_cast<std::size_t>(k)];
          if (gap < 1 || (a0 > 0 && gap < 2)) ok = false;
        }
        if (nu[static_cast<std::size_t>(p - 1)] -
                nu[static_cast<std::size_t>(p - 2)] < 1 ||
            nu[static_cast<std::size_t>(p - 2)] -
                nu[static_cast<std::size_t>(p - 3)] < 1)
          ok = false;
        for (std::int64_t s = 0; ok && s <= p - 2; ++s)
          if (nu[static_cast<std::size_t>(s)] >= e + (s + 1) / 2) ok = false;
        for (std::int64_t i = 0; ok && i < p; ++i) {
          std::int64_t gap = nu[static_cast<std::size_t>(i)] -
                             n[static_cast<std::size_t>(i)];
          if (gap != 0 && gap != 1) ok = false;
          if (i > 0 && profile.e_set.contains(p - i) && gap != 0) ok = false;
        }
        if (!ok) {
          res.pass = false;
          res.detail = tuple_tag(*rd);
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_scaffold(std::int64_t max_p) {
  CheckResult res{"scaffold identity and band detection", true, ""};
  for (std::int64_t p : odd_primes_up_to(max_p)) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t a0 = 0; a0 <= 2; ++a0) {
        auto rd = synthetic_tuple(p, a, a0);
        if (!rd) continue;
        auto [c, l] = scaffold_precision(*rd);
        bool ok = (c == l * p + a) && l >= 0;
        CaseTag band = classify(*rd);
        if ((l > 0) != (band == CaseTag::LowBand)) ok = false;
        // Jump threshold form of the band test, with the p = 3 correction.
        bool high = band == CaseTag::HighBand;
        bool threshold = (p > 3) ? (rd->t * (p - 1) >= 2 * p * rd->e - 2 * (p - 1))
                                 : (rd->t >= 3 * rd->e - 2);
        if (high != threshold) ok = false;
        if (!ok) {
          res.pass = false;
          res.detail = tuple_tag(*rd);
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_ring_conditions(std::int64_t max_p) {
  CheckResult res{"ring conditions match the divisibility criterion", true, ""};
  for (std::int64_t p : odd_primes_up_to(max_p)) {
    for (std::int64_t a = 1; a < p; ++a) {
      auto rd = synthetic_tuple(p, a, (2 * a > p) ? 0 : 1);
      if (!rd) continue;
      RingConditionReport report = ring_conditions(*rd);
      bool divides = (p - 1) % a == 0;
      bool ok = report.cond2 && (report.cond1 == divides) &&
                (orders_equal(*rd) == (report.cond1 && report.cond2));
      if (!ok) {
        res.pass = false;
        res.detail = tuple_tag(*rd);
        return res;
      }
    }
  }
  return res;
}

CheckResult check_wp_identity(std::int64_t max_p) {
  CheckResult res{"degree-p reduction identity vanishes exactly", true, ""};
  for (std::int64_t p : odd_primes_up_to(std::min<std::int64_t>(max_p, 23)))
    if (!verify_wp_identity(p)) {
      res.pass = false;
      res.detail = "p=" + std::to_string(p);
      return res;
    }
  return res;
}

CheckResult check_c_coeffs(std::int64_t max_p) {
  CheckResult res{"c_j closed forms agree with valuation exactly 1", true, ""};
  for (std::int64_t p : odd_primes_up_to(max_p)) {
    try {
      wp_reduction_coeffs(p);  // asserts both forms and v_p = 1 internally
    } catch (const Error& err) {
      res.pass = false;
      res.detail = "p=" + std::to_string(p) + ": " + err.what();
      return res;
    }
  }
  return res;
}

CheckResult check_ab_matrices(std::int64_t max_p) {
  CheckResult res{"odd-power change of basis inverts and reproduces c_j", true,
                  ""};
  for (std::int64_t p : odd_primes_up_to(std::min<std::int64_t>(max_p, 23))) {
    try {
      ABMatrices ab = ab_matrices(p);
      for (std::size_t i = 0; i < ab.a.size(); ++i)
        if (ab.a[i][i] != 1 || ab.b[i][i] != 1)
          raise(errc::internal, "diagonal is not 1");
    } catch (const Error& err) {
      res.pass = false;
      res.detail = "p=" + std::to_string(p) + ": " + err.what();
      return res;
    }
  }
  return res;
}

CheckResult check_wpower_table(std::int64_t max_p) {
  CheckResult res{"w-power expansion staircase", true, ""};
  for (std::int64_t p : odd_primes_up_to(std::min<std::int64_t>(max_p, 23))) {
    for (std::int64_t e : {1, 2, 5}) {
      try {
        auto table = wpower_val_table(p, e);
        for (std::int64_t m = 1; m <= p - 1; ++m) {
          const auto& row = table[static_cast<std::size_t>(m)];
          for (std::int64_t idx = 1; idx < p; ++idx) {
            const ValCoeff& vc = row[static_cast<std::size_t>(idx)];
            if ((idx - m) % 2 != 0) {
              if (!vc.is_zero()) raise(errc::internal, "parity break");
              continue;
            }
            if (idx >= m) {
              if (!vc.exact || vc.val != e + (p - 1) / 2 - (idx - m) / 2)
                raise(errc::internal, "staircase break");
            } else {
              if (vc.exact || vc.val != 2 * e + (p - 1) / 2 + (m - idx) / 2)
                raise(errc::internal, "low bound break");
            }
          }
        }
      } catch (const Error& err) {
        res.pass = false;
        res.detail = "p=" + std::to_string(p) + ", e=" + std::to_string(e) +
                     ": " + err.what();
        return res;
      }
    }
  }
  return res;
}

MaximalModel random_model(std::int64_t p, std::mt19937_64& rng) {
  std::vector<std::int64_t> lambdas(static_cast<std::size_t>(p));
  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u < p; ++u) units.push_back(u);
  std::shuffle(units.begin(), units.end(), rng);
  std::uniform_int_distribution<std::int64_t> lift(0, 2);
  for (std::int64_t j = 1; j < p; ++j)
    lambdas[static_cast<std::size_t>(j)] =
        units[static_cast<std::size_t>(j - 1)] + p * lift(rng);
  return make_maximal_model(p, std::move(lambdas));
}

CheckResult check_reduction_trials(std::uint64_t seed) {
  CheckResult res{"randomized maximal-model reduction trials", true, ""};
  std::mt19937_64 rng(seed);
  const std::vector<std::int64_t> primes = {3, 5, 7};
  std::int64_t trials = 0;
  for (std::int64_t trial = 0; trial < 100; ++trial) {
    std::int64_t p = primes[static_cast<std::size_t>(trial) % primes.size()];
    MaximalModel mm = random_model(p, rng);
    ++trials;

    ActionMatrix action = maximal_action(mm);
    ReducedPair rp = reduce(action);
    RatMatrix lam = vandermonde(mm);
    bool ok = (rp.D == lam) && verify_certificate(rp);

    // Delta action of the extracted basis through the stacked matrix.
    std::vector<RatVector> basis = basis_from_reduced(rp);
    for (std::int64_t i = 0; ok && i < p; ++i)
      for (std::int64_t j = 0; j < p; ++j) {
        Rat scalar(0);
        for (std::int64_t l = 0; l < p; ++l)
          scalar += lam[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] *
                    basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        scalar.canonicalize();
        if (scalar != Rat(i == j ? 1 : 0)) {
          ok = false;
          break;
        }
      }

    if (ok && !idempotent_check(mm)) ok = false;

    // A shuffled stack must span the same p-local row lattice.
    if (ok) {
      RatMatrix shuffled = action.rows;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      ReducedPair rp2 = reduce(make_action_matrix(p, p, std::move(shuffled)));
      RatMatrix cob1 = rat_mul(rp.D, rat_inverse(rp2.D));
      RatMatrix cob2 = rat_mul(rp2.D, rat_inverse(rp.D));
      if (!rat_is_p_integral(cob1, p) || !rat_is_p_integral(cob2, p)) ok = false;
    }

    // Re-reducing the reduced form must reproduce it unchanged.
    if (ok) {
      RatMatrix stack = rp.D;
      stack.resize(static_cast<std::size_t>(p * p),
                   RatVector(static_cast<std::size_t>(p), Rat(0)));
      ReducedPair rp3 = reduce(make_action_matrix(p, p, std::move(stack)));
      if (rp3.D != rp.D) ok = false;
    }

    if (!ok) {
      res.pass = false;
      res.detail = "trial " + std::to_string(trial) + " at p=" + std::to_string(p);
      return res;
    }
  }
  res.detail = std::to_string(trials) + " trials";
  return res;
}

CheckResult check_rank_deficient() {
  CheckResult res{"rank-deficient stacks are rejected", true, ""};
  RatMatrix rows(9, RatVector(3, Rat(0)));
  rows[0][0] = 1;
  rows[4][0] = 2;  // dependent on row 0
  rows[8][1] = 1;
  try {
    reduce(make_action_matrix(3, 3, std::move(rows)));
    res.pass = false;
    res.detail = "rank-2 stack was accepted";
  } catch (const Error& err) {
    if (err.code() != errc::rank_deficient) {
      res.pass = false;
      res.detail = err.what();
    }
  }
  return res;
}

CheckResult check_pattern_certificates(std::int64_t max_p) {
  CheckResult res{"pattern certificates decide exactly as the expansion length",
                  true, ""};
  std::int64_t profiles = 0;
  for (std::int64_t p : odd_primes_up_to(std::min<std::int64_t>(max_p, 63))) {
    for (std::int64_t a = 1; a < p; ++a) {
      RamificationData rd = high_band_tuple(p, a);
      OrderProfile profile = make_order_profile(rd);
      const std::int64_t n = cf_expand(a, p).length();
      const bool expect_free = n <= 4;
      ++profiles;

      bool ok = dihedral_verdict(rd).free == expect_free;

      // Diagonal of the identity matrix mirrors n_i = nu_i.
      for (std::int64_t i = 0; ok && i < p; ++i) {
        bool diag = entry_nonzero(entry_class(profile, 0, i, i));
        if (diag != (profile.n[static_cast<std::size_t>(i)] ==
                     profile.nu[static_cast<std::size_t>(i)]))
          ok = false;
      }

      bool suff = false, nec = false;
      std::string note;
      try {
        SufficiencyWitness w = sufficiency_check(profile);
        suff = true;
        if (w.poly_degree_bound > p - 2) ok = false;
      } catch (const Error& err) {
        if (err.code() != errc::precondition_violated) {
          ok = false;
          note = err.what();
        }
      }
      try {
        NecessityCertificate cert = necessity_check(profile);
        nec = true;
        if (cert.cover_deficit < 1) ok = false;
      } catch (const Error& err) {
        if (err.code() != errc::precondition_violated) {
          ok = false;
          note = err.what();
        }
      }

      if (n <= 2) {
        if (suff || nec || !orders_equal(rd)) ok = false;
      } else if (n <= 4) {
        if (!suff || nec || !expect_free) ok = false;
      } else {
        if (suff || !nec || expect_free) ok = false;
      }

      if (!ok) {
        res.pass = false;
        res.detail = tuple_tag(rd) + " n=" + std::to_string(n) +
                     (note.empty() ? "" : " " + note);
        return res;
      }
    }
  }
  res.detail = std::to_string(profiles) + " high-band profiles";
  return res;
}

void append(SuiteReport& report, CheckResult check) {
  report.checks.push_back(std::move(check));
}

SuiteReport suite_cfrac(std::optional<std::int64_t> max_p) {
  SuiteReport report{"cfrac", {}};
  append(report, check_cf_canonical(max_p.value_or(200)));
  append(report, check_cf_best_approx(max_p.value_or(200)));
  append(report, check_eset_equivalence(max_p.value_or(500)));
  append(report, check_modular_distance(max_p.value_or(23)));
  return report;
}

SuiteReport suite_assocorder(std::optional<std::int64_t> max_p) {
  SuiteReport report{"assocorder", {}};
  append(report, check_n_dual_formulas(max_p.value_or(199)));
  append(report, check_profile_invariants(max_p.value_or(199)));
  append(report, check_scaffold(max_p.value_or(199)));
  append(report, check_ring_conditions(max_p.value_or(99)));
  return report;
}

SuiteReport suite_groupring(std::optional<std::int64_t> max_p) {
  SuiteReport report{"groupring", {}};
  append(report, check_wp_identity(max_p.value_or(23)));
  append(report, check_c_coeffs(max_p.value_or(101)));
  append(report, check_ab_matrices(max_p.value_or(23)));
  append(report, check_wpower_table(max_p.value_or(23)));
  return report;
}

SuiteReport suite_redmethod(std::uint64_t seed) {
  SuiteReport report{"redmethod", {}};
  append(report, check_reduction_trials(seed));
  append(report, check_rank_deficient());
  return report;
}

SuiteReport suite_patterns(std::optional<std::int64_t> max_p) {
  SuiteReport report{"patterns", {}};
  append(report, check_pattern_certificates(max_p.value_or(49)));
  return report;
}

}  // namespace

SuiteReport run_suite(const std::string& suite,
                      std::optional<std::int64_t> max_p, std::uint64_t seed) {
  if (suite == "cfrac") return suite_cfrac(max_p);
  if (suite == "assocorder") return suite_assocorder(max_p);
  if (suite == "groupring") return suite_groupring(max_p);
  if (suite == "redmethod") return suite_redmethod(seed);
  if (suite == "patterns") return suite_patterns(max_p);
  if (suite == "all") {
    SuiteReport report{"all", {}};
    for (const char* name :
         {"cfrac", "assocorder", "groupring", "redmethod", "patterns"}) {
      SuiteReport sub = run_suite(name, max_p, seed);
      for (CheckResult& c : sub.checks) {
        c.name = sub.suite + ": " + c.name;
        report.checks.push_back(std::move(c));
      }
    }
    return report;
  }
  raise(errc::parameter, "unknown suite '" + suite + "'");
}

}  // namespace galord
