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
#include "galord/numutil.hpp"

#include "galord/errors.hpp"

namespace galord {

const char* errc_name(errc code) {
  switch (code) {
    case errc::parameter: return "Parameter";
    case errc::out_of_range: return "OutOfRange";
    case errc::parity_violation: return "ParityViolation";
    case errc::divisibility_violation: return "DivisibilityViolation";
    case errc::not_applicable: return "NotApplicable";
    case errc::domain: return "Domain";
    case errc::rank_deficient: return "RankDeficient";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::structure_mismatch: return "StructureMismatch";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  BigInt z(static_cast<long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

std::vector<std::int64_t> odd_primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 3) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i * i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (std::int64_t j = i * i; j <= bound; j += i)
      composite[static_cast<std::size_t>(j)] = true;
  }
  for (std::int64_t i = 3; i <= bound; i += 2)
    if (!composite[static_cast<std::size_t>(i)]) primes.push_back(i);
  return primes;
}

std::int64_t padic_valuation(const BigInt& value, std::int64_t p) {
  if (value == 0) raise(errc::parameter, "p-adic valuation of zero");
  BigInt rest = abs(value);
  BigInt prime(static_cast<long>(p));
  std::int64_t v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
    rest /= prime;
    ++v;
  }
  return v;
}

std::int64_t padic_valuation(const Rat& value, std::int64_t p) {
  if (value == 0) raise(errc::parameter, "p-adic valuation of zero");
  return padic_valuation(BigInt(value.get_num()), p) -
         padic_valuation(BigInt(value.get_den()), p);
}

bool p_integral(const Rat& value, std::int64_t p) {
  BigInt den(value.get_den());
  return !mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p));
}

std::int64_t residue_mod_p(const Rat& value, std::int64_t p) {
  if (!p_integral(value, p))
    raise(errc::parameter, "residue of a non p-integral rational");
  BigInt prime(static_cast<long>(p));
  BigInt num(value.get_num()), den(value.get_den());
  BigInt den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()) == 0)
    raise(errc::internal, "denominator not invertible mod p");
  BigInt r = (num % prime) * den_inv % prime;
  if (r < 0) r += prime;
  return static_cast<std::int64_t>(r.get_si());
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace galord
