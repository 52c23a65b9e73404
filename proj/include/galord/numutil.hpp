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
#ifndef GALORD_NUMUTIL_HPP
#define GALORD_NUMUTIL_HPP

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace galord {

// All library arithmetic is exact. Scalars that can outgrow machine words
// (binomials, group-ring coefficients, matrix entries) use GMP; bounded
// quantities (ramification parameters, valuation exponents) stay int64_t.
using BigInt = mpz_class;
using Rat = mpq_class;

/// floor(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Euclidean remainder in [0, b) for b > 0.
std::int64_t pos_mod(std::int64_t a, std::int64_t b);

bool is_odd_prime(std::int64_t p);

std::vector<std::int64_t> odd_primes_up_to(std::int64_t bound);

/// Exponent of p in a nonzero integer.
std::int64_t padic_valuation(const BigInt& value, std::int64_t p);

/// Exponent of p in a nonzero rational (negative when p divides the denominator).
std::int64_t padic_valuation(const Rat& value, std::int64_t p);

/// True when the denominator of value (in lowest terms) is coprime to p.
bool p_integral(const Rat& value, std::int64_t p);

/// Residue of a p-integral rational modulo p, in [0, p).
std::int64_t residue_mod_p(const Rat& value, std::int64_t p);

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace galord

#endif
