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
#include "galord/groupring.hpp"

#include <string>

#include "galord/errors.hpp"

namespace galord {

namespace {

void require_odd_prime(std::int64_t p) {
  if (!is_odd_prime(p))
    raise(errc::parameter, "p = " + std::to_string(p) + " is not an odd prime");
}

// Sparse-free Laurent polynomial over Z on exponents [-span, span].
// Only used internally for the change-of-basis solve, which genuinely needs
// the infinite ring: reducing mod s^p - 1 first would collapse the relation
// being solved for.
class LaurentPoly {
public:
  explicit LaurentPoly(std::int64_t span)
      : span_(span), coeffs_(static_cast<std::size_t>(2 * span + 1)) {}

  BigInt& at(std::int64_t exponent) {
    return coeffs_[static_cast<std::size_t>(exponent + span_)];
  }
  const BigInt& at(std::int64_t exponent) const {
    return coeffs_[static_cast<std::size_t>(exponent + span_)];
  }
  std::int64_t span() const { return span_; }

  bool is_zero() const {
    for (const BigInt& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  LaurentPoly mul(const LaurentPoly& other, std::int64_t out_span) const {
    LaurentPoly out(out_span);
    for (std::int64_t i = -span_; i <= span_; ++i) {
      if (at(i) == 0) continue;
      for (std::int64_t j = -other.span_; j <= other.span_; ++j) {
        if (other.at(j) == 0) continue;
        out.at(i + j) += at(i) * other.at(j);
      }
    }
    return out;
  }

private:
  std::int64_t span_;
  std::vector<BigInt> coeffs_;
};

}  // namespace

GroupRingElement::GroupRingElement(std::int64_t p)
    : p_(p), coeffs_(static_cast<std::size_t>(p)) {
  require_odd_prime(p);
}

GroupRingElement GroupRingElement::zero(std::int64_t p) {
  return GroupRingElement(p);
}

GroupRingElement GroupRingElement::one(std::int64_t p) {
  GroupRingElement e(p);
  e.coeffs_[0] = 1;
  return e;
}

GroupRingElement GroupRingElement::sigma_pow(std::int64_t p, std::int64_t k) {
  GroupRingElement e(p);
  e.coeffs_[static_cast<std::size_t>(pos_mod(k, p))] = 1;
  return e;
}

bool GroupRingElement::is_zero() const {
  for (const BigInt& c : coeffs_)
    if (c != 0) return false;
  return true;
}

const BigInt& GroupRingElement::coeff(std::int64_t k) const {
  return coeffs_[static_cast<std::size_t>(pos_mod(k, p_))];
}

void GroupRingElement::set_coeff(std::int64_t k, const BigInt& value) {
  coeffs_[static_cast<std::size_t>(pos_mod(k, p_))] = value;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  if (p_ != other.p_) raise(errc::parameter, "group-ring order mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  if (p_ != other.p_) raise(errc::parameter, "group-ring order mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
  a += b;
  return a;
}

GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
  a -= b;
  return a;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.p_ != b.p_) raise(errc::parameter, "group-ring order mismatch");
  GroupRingElement out(a.p_);
  const std::int64_t p = a.p_;
  for (std::int64_t i = 0; i < p; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (std::int64_t j = 0; j < p; ++j) {
      if (b.coeffs_[static_cast<std::size_t>(j)] == 0) continue;
      std::int64_t k = i + j >= p ? i + j - p : i + j;
      out.coeffs_[static_cast<std::size_t>(k)] +=
          a.coeffs_[static_cast<std::size_t>(i)] *
          b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

GroupRingElement operator*(const BigInt& scalar, GroupRingElement a) {
  for (BigInt& c : a.coeffs_) c *= scalar;
  return a;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

GroupRingElement GroupRingElement::pow(std::int64_t exponent) const {
  if (exponent < 0) raise(errc::parameter, "negative group-ring power");
  GroupRingElement out = one(p_);
  for (std::int64_t i = 0; i < exponent; ++i) out = out * (*this);
  return out;
}

std::vector<BigInt> wp_reduction_coeffs(std::int64_t p) {
  require_odd_prime(p);
  std::vector<BigInt> c;
  c.reserve(static_cast<std::size_t>((p - 1) / 2));
  for (std::int64_t j = 1; j <= (p - 1) / 2; ++j) {
    BigInt first = p * binomial(p - j - 1, j - 1);
    if (first % j != 0) raise(errc::internal, "c_j closed form not integral");
    first /= j;
    BigInt second = binomial(p - j, j) + binomial(p - j - 1, j - 1);
    if (first != second)
      raise(errc::internal, "the two closed forms of c_j disagree");
    if (first <= 0 || padic_valuation(first, p) != 1)
      raise(errc::internal, "c_j must be positive with v_p(c_j) = 1");
    c.push_back(first);
  }
  return c;
}

bool verify_wp_identity(std::int64_t p) {
  std::vector<BigInt> c = wp_reduction_coeffs(p);
  GroupRingElement w = GroupRingElement::sigma_pow(p, 1);
  w -= GroupRingElement::sigma_pow(p, -1);
  GroupRingElement acc = w.pow(p);  // j = 0 term, c_0 = 1
  for (std::int64_t j = 1; j <= (p - 1) / 2; ++j)
    acc += c[static_cast<std::size_t>(j - 1)] * w.pow(p - 2 * j);
  return acc.is_zero();
}

ABMatrices ab_matrices(std::int64_t p) {
  require_odd_prime(p);
  const std::int64_t rows = (p + 1) / 2;  // i = 0..(p-1)/2
  ABMatrices out;
  out.a.resize(static_cast<std::size_t>(rows));
  out.b.resize(static_cast<std::size_t>(rows));

  for (std::int64_t i = 0; i < rows; ++i) {
    out.a[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i + 1));
    for (std::int64_t j = 0; j <= i; ++j) {
      BigInt v = binomial(2 * i + 1, i - j);
      if ((i - j) % 2 != 0) v = -v;
      out.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  }

  // Forward substitution in Z[x, 1/x]: peel the top antisymmetric monomial
  // off x^{2j+1} - x^{-(2j+1)} one odd power of (x - 1/x) at a time.
  const std::int64_t span = p;
  std::vector<LaurentPoly> odd_powers;  // (x - 1/x)^{2k+1}
  LaurentPoly base(span);
  base.at(1) = 1;
  base.at(-1) = -1;
  LaurentPoly square = base.mul(base, span);
  LaurentPoly current = base;
  odd_powers.push_back(current);
  for (std::int64_t k = 1; k < rows; ++k) {
    current = current.mul(square, span);
    odd_powers.push_back(current);
  }

  for (std::int64_t j = 0; j < rows; ++j) {
    LaurentPoly residual(span);
    residual.at(2 * j + 1) = 1;
    residual.at(-(2 * j + 1)) = -1;
    out.b[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(j + 1),
                                              BigInt(0));
    for (std::int64_t k = j; k >= 0; --k) {
      BigInt coeff = residual.at(2 * k + 1);
      out.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = coeff;
      if (coeff == 0) continue;
      const LaurentPoly& w = odd_powers[static_cast<std::size_t>(k)];
      for (std::int64_t e = -span; e <= span; ++e)
        if (w.at(e) != 0) residual.at(e) -= coeff * w.at(e);
    }
    if (!residual.is_zero())
      raise(errc::internal, "forward substitution left a nonzero residual");
  }

  // a and b must be mutually inverse on the triangle.
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t k = 0; k <= i; ++k) {
      BigInt s = 0;
      for (std::int64_t j = k; j <= i; ++j)
        s += out.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             out.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      if (s != BigInt(i == k ? 1 : 0))
        raise(errc::internal, "a*b is not the identity on the triangle");
    }
  }

  // The last row of b is the reduction coefficient list read backwards.
  std::vector<BigInt> c = wp_reduction_coeffs(p);
  const std::int64_t top = rows - 1;  // (p-1)/2
  for (std::int64_t k = 0; k <= top; ++k) {
    BigInt expect = (k == top) ? BigInt(1) : c[static_cast<std::size_t>(top - k - 1)];
    if (out.b[static_cast<std::size_t>(top)][static_cast<std::size_t>(k)] != expect)
      raise(errc::internal, "last row of b does not match the c_j");
  }

  return out;
}

ValCoeff vc_add(const ValCoeff& x, const ValCoeff& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.val < y.val) return x;
  if (y.val < x.val) return y;
  return ValCoeff::bound(x.val);
}

ValCoeff vc_mul(const ValCoeff& x, const ValCoeff& y) {
  if (x.is_zero() || y.is_zero()) return ValCoeff::zero();
  return {x.val + y.val, x.exact && y.exact};
}

std::vector<std::vector<ValCoeff>> wpower_val_table(std::int64_t p,
                                                    std::int64_t e) {
  require_odd_prime(p);
  if (e < 1) raise(errc::parameter, "e must be >= 1");
  const std::size_t width = static_cast<std::size_t>(p);
  const std::int64_t half = (p - 1) / 2;

  // w^p = sum over j of (unit of valuation e+j) * w^{p-2j}.
  std::vector<ValCoeff> base(width, ValCoeff::zero());
  for (std::int64_t j = 1; j <= half; ++j)
    base[static_cast<std::size_t>(p - 2 * j)] = ValCoeff::unit(e + j);

  std::vector<std::vector<ValCoeff>> sharp;
  sharp.push_back(base);  // m = 1
  for (std::int64_t m = 2; m <= p - 1; ++m) {
    const std::vector<ValCoeff>& prev = sharp.back();
    std::vector<ValCoeff> cur(width, ValCoeff::zero());
    for (std::int64_t idx = p - 1; idx >= 2; --idx)
      cur[static_cast<std::size_t>(idx)] = prev[static_cast<std::size_t>(idx - 1)];
    const ValCoeff carry = prev[width - 1];  // coefficient that lands on w^p
    if (!carry.is_zero())
      for (std::int64_t j = 1; j <= half; ++j) {
        std::size_t idx = static_cast<std::size_t>(p - 2 * j);
        cur[idx] = vc_add(cur[idx], vc_mul(carry, base[idx]));
      }
    sharp.push_back(std::move(cur));
  }

  // Check the induction against the closed-form shape, then report the low
  // range with bound semantics.
  std::vector<std::vector<ValCoeff>> table(static_cast<std::size_t>(p));
  for (std::int64_t m = 1; m <= p - 1; ++m) {
    const std::vector<ValCoeff>& row = sharp[static_cast<std::size_t>(m - 1)];
    std::vector<ValCoeff> reported(width, ValCoeff::zero());
    const std::int64_t m_half = (m + 1) / 2;  // m' for both parities
    for (std::int64_t idx = 0; idx < p; ++idx) {
      const ValCoeff& vc = row[static_cast<std::size_t>(idx)];
      const bool parity_ok = (idx >= 1) && ((idx - m) % 2 == 0);
      if (!parity_ok) {
        if (!vc.is_zero())
          raise(errc::internal, "unexpected coefficient of mismatched parity");
        continue;
      }
      if (idx >= m) {
        const std::int64_t want = e + half - (idx - m) / 2;
        if (vc.is_zero() || !vc.exact || vc.val != want)
          raise(errc::internal, "high-range staircase violated");
        reported[static_cast<std::size_t>(idx)] = vc;
      } else {
        const std::int64_t want = 2 * e + half + (m - idx) / 2;
        if (vc.is_zero() || vc.val != want)
          raise(errc::internal, "low-range bound violated");
        reported[static_cast<std::size_t>(idx)] = ValCoeff::bound(want);
      }
    }
    // Top of the staircase sits at w^{p-2} (m odd) or w^{p-1} (m even) with
    // valuation e + m'.
    const std::int64_t top_idx = (m % 2 == 1) ? p - 2 : p - 1;
    if (reported[static_cast<std::size_t>(top_idx)] != ValCoeff::unit(e + m_half))
      raise(errc::internal, "staircase top mismatch");
    table[static_cast<std::size_t>(m)] = std::move(reported);
  }
  return table;
}

}  // namespace galord
