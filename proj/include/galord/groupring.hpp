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
#ifndef GALORD_GROUPRING_HPP
#define GALORD_GROUPRING_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "galord/numutil.hpp"

namespace galord {

/// Exact element of Z[s]/(s^p - 1) for the cyclic generator s of order p.
/// Negative exponents are Laurent-style aliases: s^{-k} = s^{p-k}.
class GroupRingElement {
public:
  explicit GroupRingElement(std::int64_t p);

  static GroupRingElement zero(std::int64_t p);
  static GroupRingElement one(std::int64_t p);
  /// s^k for any integer k (reduced mod p).
  static GroupRingElement sigma_pow(std::int64_t p, std::int64_t k);

  std::int64_t order() const { return p_; }
  bool is_zero() const;

  /// Coefficient of s^k, k taken mod p (so negative k reads the alias).
  const BigInt& coeff(std::int64_t k) const;
  void set_coeff(std::int64_t k, const BigInt& value);

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b);
  friend GroupRingElement operator*(const BigInt& scalar, GroupRingElement a);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

  /// Power by repeated multiplication; the induction downstream mirrors this
  /// step-by-step structure, so no square-and-multiply here.
  GroupRingElement pow(std::int64_t exponent) const;

private:
  std::int64_t p_;
  std::vector<BigInt> coeffs_;
};

/// Coefficients c_j, 1 <= j <= (p-1)/2, of the degree-p reduction of the
/// antisymmetric generator: c_j = (p/j) C(p-j-1, j-1). Both closed forms
/// (the second being C(p-j, j) + C(p-j-1, j-1)) are evaluated and checked
/// against each other, and each c_j is verified positive with p-adic
/// valuation exactly 1.
std::vector<BigInt> wp_reduction_coeffs(std::int64_t p);

/// Exact check that sum_{j=0}^{(p-1)/2} c_j (s - s^{-1})^{p-2j} vanishes in
/// Z[s]/(s^p - 1), with c_0 = 1.
bool verify_wp_identity(std::int64_t p);

/// Change of basis between odd antisymmetric powers: a expands
/// (s - s^{-1})^{2i+1} over the s^{2j+1} - s^{-(2j+1)}, b inverts that
/// relation. a comes from the closed form (-1)^{i-j} C(2i+1, i-j); b is
/// solved by forward substitution in the infinite Laurent ring, then checked
/// against a (their product is the identity) and against the c_j, which
/// reappear as the last row of b.
struct ABMatrices {
  // lower triangular, rows i = 0..(p-1)/2, entries for j <= i
  std::vector<std::vector<BigInt>> a;
  std::vector<std::vector<BigInt>> b;
};

ABMatrices ab_matrices(std::int64_t p);

/// Valuation of one coefficient in a w-power expansion. val is the exponent
/// of the base uniformizer; exact means the coefficient is that power times
/// a unit, otherwise val is only a lower bound. val = +infinity encodes the
/// zero coefficient.
struct ValCoeff {
  static constexpr std::int64_t kInfinity =
      std::numeric_limits<std::int64_t>::max();

  std::int64_t val = kInfinity;
  bool exact = true;

  bool is_zero() const { return val == kInfinity; }
  static ValCoeff zero() { return {}; }
  static ValCoeff unit(std::int64_t v) { return {v, true}; }
  static ValCoeff bound(std::int64_t v) { return {v, false}; }

  friend bool operator==(const ValCoeff&, const ValCoeff&) = default;
};

/// Lower-bound-sound sum: the smaller valuation wins and keeps its flag; a
/// tie degrades to a bound (units can cancel).
ValCoeff vc_add(const ValCoeff& x, const ValCoeff& y);
/// Valuations add; exactness survives only if both factors are exact units.
ValCoeff vc_mul(const ValCoeff& x, const ValCoeff& y);

/// Expansion table of w^{p-1+m} over {w, ..., w^{p-1}} for m = 1..p-1,
/// where w^p = sum of unit multiples of pi^{e+j} w^{p-2j}. Entry [m][idx]
/// is the coefficient of w^idx (idx = 0 slot unused). Built inductively by
/// repeated multiplication from the m = 1 base case; the high range
/// idx >= m carries the exact unit staircase e+m', e+m'+1, ..., e+(p-1)/2
/// and the low range idx < m carries lower bounds 2e+(p+1)/2, 2e+(p+3)/2, ...
/// The low range is reported as bounds even where the induction happens to
/// keep a unit, matching the coarser contract.
std::vector<std::vector<ValCoeff>> wpower_val_table(std::int64_t p,
                                                    std::int64_t e);

}  // namespace galord

#endif
