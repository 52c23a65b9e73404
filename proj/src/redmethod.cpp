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
#include "galord/redmethod.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "galord/errors.hpp"

namespace galord {

namespace {

bool row_is_zero(const RatVector& row) {
  for (const Rat& x : row)
    if (x != 0) return false;
  return true;
}

void axpy(RatVector& target, const Rat& scale, const RatVector& source) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    target[i] += scale * source[i];
    target[i].canonicalize();
  }
}

// Solves combo * P = r over Q for the full-row-rank pivot stack P.
// Returns false when r is outside the row span.
bool solve_combination(const std::vector<const RatVector*>& pivots,
                       const RatVector& r, RatVector& combo) {
  const std::size_t k = pivots.size();
  const std::size_t n = r.size();
  combo.assign(k, Rat(0));
  if (k == 0) return row_is_zero(r);

  // Augmented system P^T * combo = r^T, eliminated column by column.
  RatMatrix aug(n, RatVector(k + 1, Rat(0)));
  for (std::size_t col = 0; col < k; ++col)
    for (std::size_t row = 0; row < n; ++row) aug[row][col] = (*pivots[col])[row];
  for (std::size_t row = 0; row < n; ++row) aug[row][k] = r[row];

  std::vector<std::size_t> pivot_rows;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < k && lead < n; ++col) {
    std::size_t sel = lead;
    while (sel < n && aug[sel][col] == 0) ++sel;
    if (sel == n) continue;  // cannot happen for independent pivots
    std::swap(aug[sel], aug[lead]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == lead || aug[row][col] == 0) continue;
      Rat f = aug[row][col] / aug[lead][col];
      for (std::size_t c = col; c <= k; ++c) {
        aug[row][c] -= f * aug[lead][c];
        aug[row][c].canonicalize();
      }
    }
    pivot_rows.push_back(col);
    ++lead;
  }
  if (pivot_rows.size() != k)
    raise(errc::internal, "pivot stack lost independence");

  // Consistency: rows past the pivots must have vanished entirely.
  for (std::size_t row = lead; row < n; ++row)
    if (aug[row][k] != 0) return false;

  for (std::size_t i = k; i-- > 0;) {
    Rat value = aug[i][k];
    for (std::size_t j = i + 1; j < k; ++j) value -= aug[i][pivot_rows[j]] * combo[j];
    combo[i] = value / aug[i][pivot_rows[i]];
    combo[i].canonicalize();
  }
  return true;
}

}  // namespace

RatMatrix rat_identity(std::int64_t n) {
  RatMatrix m(static_cast<std::size_t>(n),
              RatVector(static_cast<std::size_t>(n), Rat(0)));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  return m;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  RatMatrix out(rows, RatVector(cols, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        out[i][j] += a[i][k] * b[k][j];
        out[i][j].canonicalize();
      }
    }
  return out;
}

RatMatrix rat_inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix work = m;
  RatMatrix inv = rat_identity(static_cast<std::int64_t>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && work[sel][col] == 0) ++sel;
    if (sel == n) raise(errc::parameter, "matrix is singular");
    std::swap(work[sel], work[col]);
    std::swap(inv[sel], inv[col]);
    Rat piv = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= piv;
      work[col][j].canonicalize();
      inv[col][j] /= piv;
      inv[col][j].canonicalize();
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || work[row][col] == 0) continue;
      Rat f = work[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[row][j] -= f * work[col][j];
        work[row][j].canonicalize();
        inv[row][j] -= f * inv[col][j];
        inv[row][j].canonicalize();
      }
    }
  }
  return inv;
}

bool rat_is_p_integral(const RatMatrix& m, std::int64_t p) {
  for (const RatVector& row : m)
    for (const Rat& x : row)
      if (!p_integral(x, p)) return false;
  return true;
}

std::int64_t det_mod_p(const RatMatrix& m, std::int64_t p) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::int64_t>> red(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) red[i][j] = residue_mod_p(m[i][j], p);

  auto inv_mod = [p](std::int64_t x) {
    std::int64_t result = 1, base = pos_mod(x, p), exp = p - 2;
    while (exp > 0) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return result;
  };

  std::int64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && red[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(red[sel], red[col]);
      det = pos_mod(p - det, p);
    }
    det = det * red[col][col] % p;
    std::int64_t piv_inv = inv_mod(red[col][col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (red[row][col] == 0) continue;
      std::int64_t f = red[row][col] * piv_inv % p;
      for (std::size_t j = col; j < n; ++j)
        red[row][j] = pos_mod(red[row][j] - f * red[col][j], p);
    }
  }
  return det;
}

ActionMatrix make_action_matrix(std::int64_t p, std::int64_t n, RatMatrix rows) {
  if (!is_odd_prime(p)) raise(errc::parameter, "p must be an odd prime");
  if (n < 1) raise(errc::parameter, "n must be >= 1");
  if (rows.size() != static_cast<std::size_t>(n * n))
    raise(errc::parameter, "stack must have n^2 rows");
  for (RatVector& row : rows) {
    if (row.size() != static_cast<std::size_t>(n))
      raise(errc::parameter, "rows must have width n");
    for (Rat& x : row) {
      x.canonicalize();
      if (!p_integral(x, p))
        raise(errc::parameter, "entry denominator divisible by p");
    }
  }
  return ActionMatrix{p, n, std::move(rows)};
}

ReducedPair reduce(const ActionMatrix& m) {
  const std::int64_t p = m.p;
  const std::size_t total = m.rows.size();
  RatMatrix rows = m.rows;
  RatMatrix u = rat_identity(static_cast<std::int64_t>(total));
  std::vector<std::size_t> pivot_idx;

  for (std::size_t r = 0; r < total; ++r) {
    if (row_is_zero(rows[r])) continue;

    std::vector<const RatVector*> pivots;
    pivots.reserve(pivot_idx.size());
    for (std::size_t idx : pivot_idx) pivots.push_back(&rows[idx]);

    RatVector combo;
    if (!solve_combination(pivots, rows[r], combo)) {
      pivot_idx.push_back(r);  // independent: adopt the row untouched
      continue;
    }

    // Row r lies in the pivot span; find the worst denominator.
    std::int64_t min_val = 0;
    std::size_t min_at = combo.size();
    for (std::size_t i = 0; i < combo.size(); ++i) {
      if (combo[i] == 0) continue;
      std::int64_t v = padic_valuation(combo[i], p);
      if (v < min_val) {
        min_val = v;
        min_at = i;
      }
    }

    if (min_at == combo.size()) {
      // Every coefficient is p-integral: eliminate row r outright.
      for (std::size_t i = 0; i < combo.size(); ++i) {
        if (combo[i] == 0) continue;
        axpy(rows[r], -combo[i], rows[pivot_idx[i]]);
        axpy(u[r], -combo[i], u[pivot_idx[i]]);
      }
      if (!row_is_zero(rows[r]))
        raise(errc::internal, "integral elimination left a nonzero row");
    } else {
      // The dependency needs a denominator divisible by p, so row r is the
      // better lattice representative: swap it in for the pivot carrying the
      // most negative coefficient valuation, then eliminate the old pivot
      // with the (now p-integral) rearranged coefficients.
      const std::size_t old = pivot_idx[min_at];
      pivot_idx[min_at] = r;
      Rat inv_c = Rat(1) / combo[min_at];
      inv_c.canonicalize();
      axpy(rows[old], -inv_c, rows[r]);
      axpy(u[old], -inv_c, u[r]);
      for (std::size_t i = 0; i < combo.size(); ++i) {
        if (i == min_at || combo[i] == 0) continue;
        Rat f = combo[i] * inv_c;
        f.canonicalize();
        axpy(rows[old], f, rows[pivot_idx[i]]);
        axpy(u[old], f, u[pivot_idx[i]]);
      }
      if (!row_is_zero(rows[old]))
        raise(errc::internal, "pivot exchange left a nonzero row");
    }
  }

  if (pivot_idx.size() != static_cast<std::size_t>(m.n))
    raise(errc::rank_deficient,
          "stacked action matrix has rank " + std::to_string(pivot_idx.size()) +
              " < " + std::to_string(m.n));

  // Final permutation: pivots to the top in selection order.
  std::vector<std::size_t> order = pivot_idx;
  std::set<std::size_t> used(pivot_idx.begin(), pivot_idx.end());
  for (std::size_t r = 0; r < total; ++r)
    if (!used.count(r)) order.push_back(r);

  ReducedPair rp;
  rp.p = p;
  rp.n = m.n;
  rp.M = m.rows;
  rp.D.reserve(static_cast<std::size_t>(m.n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(m.n); ++i)
    rp.D.push_back(rows[pivot_idx[i]]);
  rp.U.reserve(total);
  for (std::size_t r : order) rp.U.push_back(u[r]);
  return rp;
}

bool verify_certificate(const ReducedPair& rp) {
  if (!rat_is_p_integral(rp.U, rp.p)) return false;
  if (det_mod_p(rp.U, rp.p) == 0) return false;
  RatMatrix product = rat_mul(rp.U, rp.M);
  const std::size_t n = static_cast<std::size_t>(rp.n);
  for (std::size_t i = 0; i < product.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat expect = (i < n) ? rp.D[i][j] : Rat(0);
      if (product[i][j] != expect) return false;
    }
  return true;
}

std::vector<RatVector> basis_from_reduced(const ReducedPair& rp) {
  RatMatrix d_inv = rat_inverse(rp.D);
  const std::size_t n = static_cast<std::size_t>(rp.n);
  std::vector<RatVector> columns(n, RatVector(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) columns[i][l] = d_inv[l][i];

  // Integrality of the action on each basis vector.
  for (const RatVector& col : columns)
    for (const RatVector& row : rp.M) {
      Rat entry(0);
      for (std::size_t l = 0; l < n; ++l) entry += row[l] * col[l];
      entry.canonicalize();
      if (!p_integral(entry, rp.p))
        raise(errc::internal, "basis vector acts non-integrally");
    }
  return columns;
}

MaximalModel make_maximal_model(std::int64_t p,
                                std::vector<std::int64_t> lambdas) {
  if (!is_odd_prime(p)) raise(errc::parameter, "p must be an odd prime");
  if (lambdas.size() != static_cast<std::size_t>(p))
    raise(errc::parameter, "need exactly p eigenvalues");
  if (lambdas[0] != 0) raise(errc::parameter, "lambda_0 must be 0");
  std::set<std::int64_t> residues;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    std::int64_t r = pos_mod(lambdas[j], p);
    if (j > 0 && r == 0)
      raise(errc::parameter, "lambda_" + std::to_string(j) + " must be a unit mod p");
    if (!residues.insert(r).second)
      raise(errc::parameter, "eigenvalues must be pairwise distinct mod p");
  }
  return MaximalModel{p, std::move(lambdas)};
}

ActionMatrix maximal_action(const MaximalModel& mm) {
  const std::int64_t p = mm.p;
  RatMatrix rows(static_cast<std::size_t>(p * p),
                 RatVector(static_cast<std::size_t>(p), Rat(0)));
  for (std::int64_t j = 0; j < p; ++j) {
    Rat power(1);
    for (std::int64_t i = 0; i < p; ++i) {
      rows[static_cast<std::size_t>(j * p + j)][static_cast<std::size_t>(i)] =
          power;
      power *= mm.lambdas[static_cast<std::size_t>(j)];
    }
  }
  return make_action_matrix(p, p, std::move(rows));
}

RatMatrix vandermonde(const MaximalModel& mm) {
  const std::int64_t p = mm.p;
  RatMatrix lam(static_cast<std::size_t>(p),
                RatVector(static_cast<std::size_t>(p), Rat(0)));
  for (std::int64_t j = 0; j < p; ++j) {
    Rat power(1);
    for (std::int64_t i = 0; i < p; ++i) {
      lam[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = power;
      power *= mm.lambdas[static_cast<std::size_t>(j)];
    }
  }
  return lam;
}

bool idempotent_check(const MaximalModel& mm) {
  const std::int64_t p = mm.p;
  const std::size_t np = static_cast<std::size_t>(p);
  RatMatrix lam = vandermonde(mm);
  RatMatrix omega = rat_inverse(lam);

  auto apply_omega = [&](const RatVector& v) {
    RatVector out(np, Rat(0));
    for (std::size_t r = 0; r < np; ++r)
      for (std::size_t c = 0; c < np; ++c) {
        out[r] += omega[r][c] * v[c];
        out[r].canonicalize();
      }
    return out;
  };

  // Coordinates of w^m over the basis {w^0..w^{p-1}} for m = p..2p-2: the
  // unique element acting with scalar lambda_k^m on the k-th generator.
  std::vector<RatVector> reductions;
  for (std::int64_t m = p; m <= 2 * p - 2; ++m) {
    RatVector scalars(np);
    for (std::size_t k = 0; k < np; ++k) {
      BigInt value;
      mpz_pow_ui(value.get_mpz_t(),
                 BigInt(mm.lambdas[k]).get_mpz_t(),
                 static_cast<unsigned long>(m));
      scalars[k] = Rat(value);
    }
    reductions.push_back(apply_omega(scalars));
  }

  auto multiply = [&](const RatVector& x, const RatVector& y) {
    std::vector<Rat> conv(2 * np - 1, Rat(0));
    for (std::size_t i = 0; i < np; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < np; ++j) {
        conv[i + j] += x[i] * y[j];
        conv[i + j].canonicalize();
      }
    }
    RatVector out(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(np));
    for (std::size_t m = np; m < conv.size(); ++m) {
      if (conv[m] == 0) continue;
      const RatVector& red = reductions[m - np];
      for (std::size_t l = 0; l < np; ++l) {
        out[l] += conv[m] * red[l];
        out[l].canonicalize();
      }
    }
    return out;
  };

  std::vector<RatVector> basis(np, RatVector(np));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t l = 0; l < np; ++l) basis[i][l] = omega[l][i];

  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      RatVector prod = multiply(basis[i], basis[j]);
      // As an element: v_i v_j = delta_ij v_j.
      for (std::size_t l = 0; l < np; ++l) {
        Rat expect = (i == j) ? basis[j][l] : Rat(0);
        if (prod[l] != expect) return false;
      }
      // Through the action: scalar on generator k must be delta_ik delta_jk.
      for (std::size_t k = 0; k < np; ++k) {
        Rat scalar(0);
        for (std::size_t l = 0; l < np; ++l) scalar += lam[k][l] * prod[l];
        scalar.canonicalize();
        if (scalar != Rat((i == j && j == k) ? 1 : 0)) return false;
      }
    }
  return true;
}

}  // namespace galord
