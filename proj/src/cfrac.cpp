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
#include "galord/cfrac.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "galord/errors.hpp"

namespace galord {

namespace {

void require_odd_prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31))
    raise(errc::parameter, "p too large (must be < 2^31)");
  if (!is_odd_prime(p))
    raise(errc::parameter, "p = " + std::to_string(p) + " is not an odd prime");
}

}  // namespace

ContinuedFraction cf_expand(std::int64_t a, std::int64_t p) {
  require_odd_prime(p);
  if (a < 0 || a >= p)
    raise(errc::parameter, "numerator must satisfy 0 <= a < p");

  ContinuedFraction cf;
  cf.numerator = a;
  cf.denominator = p;
  cf.partials.push_back(0);  // a < p, so the integer part is 0

  // Euclidean algorithm; the final quotient is automatically >= 2 because
  // the remainders are strictly decreasing and end at gcd(a, p) = 1.
  std::int64_t num = a, den = p;
  while (num != 0) {
    cf.partials.push_back(den / num);
    std::int64_t r = den % num;
    den = num;
    num = r;
  }

  std::int64_t pm2 = 0, qm2 = 1;  // p_{-2}/q_{-2}
  std::int64_t pm1 = 1, qm1 = 0;  // p_{-1}/q_{-1}
  for (std::int64_t ai : cf.partials) {
    std::int64_t pi = ai * pm1 + pm2;
    std::int64_t qi = ai * qm1 + qm2;
    cf.convergents.emplace_back(pi, qi);
    pm2 = pm1;
    qm2 = qm1;
    pm1 = pi;
    qm1 = qi;
  }

  if ((a != 0 && cf.convergents.back() != std::make_pair(a, p)) ||
      (a == 0 && cf.convergents.back() != std::make_pair(std::int64_t{0},
                                                         std::int64_t{1})) ||
      (cf.length() >= 2 && cf.partials.back() < 2))
    raise(errc::internal, "continued fraction reconstruction failed");
  return cf;
}

const std::vector<std::pair<std::int64_t, std::int64_t>>& convergents(
    const ContinuedFraction& cf) {
  return cf.convergents;
}

Rat frac_part(const Rat& x) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rat out = x - Rat(fl);
  out.canonicalize();
  return out;
}

Rat nearest_dist(const Rat& x) {
  Rat twice = 2 * x;
  twice.canonicalize();
  if (twice.get_den() == 1)
    raise(errc::domain,
          "distance to the nearest integer is undefined when 2x is integral");
  Rat f = frac_part(x);
  Rat other = 1 - f;
  return f < other ? f : other;
}

bool ESet::contains(std::int64_t h) const {
  return std::binary_search(members.begin(), members.end(), h);
}

ESet e_set_bruteforce(std::int64_t a, std::int64_t p) {
  require_odd_prime(p);
  if (a <= 0 || a >= p)
    raise(errc::parameter, "a must satisfy 1 <= a <= p-1");

  ESet out;
  out.p = p;
  out.a = a;
  // frac(h a / p) = ((h a) mod p) / p; compare numerators.
  std::int64_t best = p;
  std::int64_t r = 0;
  for (std::int64_t h = 1; h < p; ++h) {
    r = (r + a) % p;
    if (r < best) {
      best = r;
      out.members.push_back(h);
    }
  }
  return out;
}

ESet e_set_parametrized(std::int64_t a, std::int64_t p) {
  ContinuedFraction cf = cf_expand(a, p);
  if (a <= 0) raise(errc::parameter, "a must satisfy 1 <= a <= p-1");

  ESet out;
  out.p = p;
  out.a = a;

  const std::int64_t n = cf.length();
  if (n == 1) {
    // Only a = 1 lands here; the defining scan gives {1} directly.
    out.members.push_back(1);
    return out;
  }

  for (std::int64_t i = 0; 2 * i < n - 1; ++i) {
    const std::int64_t q_even = cf.convergents[static_cast<std::size_t>(2 * i)].second;
    const std::int64_t q_odd =
        cf.convergents[static_cast<std::size_t>(2 * i + 1)].second;
    const std::int64_t bound = cf.partials[static_cast<std::size_t>(2 * i + 2)];
    // The top coefficient is attained only at the final window of an odd-length
    // expansion, where the walk stops one step short of wrapping around.
    const bool closing = (2 * i == n - 3);
    for (std::int64_t c = 0; c < bound + (closing ? 1 : 0); ++c)
      out.members.push_back(c * q_odd + q_even);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace galord
