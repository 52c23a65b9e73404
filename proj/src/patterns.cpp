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
#include "galord/patterns.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "galord/errors.hpp"
#include "galord/numutil.hpp"

namespace galord {

namespace {

bool high_band(const OrderProfile& profile) {
  const RamificationData& rd = profile.rd;
  return 2 * profile.nu.back() == 2 * rd.e + rd.p - 1;
}

void require_high_band(const OrderProfile& profile) {
  if (!profile.rd.dihedral_totally_ramified())
    raise(errc::parameter, "pattern analysis needs totally ramified dihedral data");
  if (!high_band(profile))
    raise(errc::precondition_violated,
          "pattern analysis applies in the high band only");
}

// frac(x a / p) as a numerator over p.
std::int64_t frac_num(const OrderProfile& profile, std::int64_t x) {
  return pos_mod(x * profile.rd.a, profile.rd.p);
}

}  // namespace

bool entry_nonzero(EntryClass c) {
  return c == EntryClass::Nonzero || c == EntryClass::One;
}

EntryClass entry_class(const OrderProfile& profile, std::int64_t k,
                       std::int64_t i, std::int64_t j) {
  const RamificationData& rd = profile.rd;
  const std::int64_t p = rd.p;
  if (k < 0 || k >= p || i < 0 || i >= p || j < 0 || j >= p)
    raise(errc::parameter, "entry indices must lie in [0, p-1]");
  if (rd.a == 0) raise(errc::not_applicable, "pattern undefined for a = 0");

  const std::int64_t h = p - i;  // h = p exactly when i = 0
  const bool h_in_e = (i > 0) && profile.e_set.contains(h);

  if (k + i <= p - 1) {
    if (j != k + i) return EntryClass::Zero;
    if (i == 0) return EntryClass::One;
    if (h_in_e) return EntryClass::One;
    const std::int64_t lhs = frac_num(profile, k + 1);
    const std::int64_t rhs = frac_num(profile, h);
    // Equal fractions force k+1 = h mod p; anything else is an arithmetic bug.
    if (lhs == rhs && pos_mod(k + 1 - h, p) != 0)
      raise(errc::internal, "fraction collision outside the diagonal case");
    return lhs < rhs ? EntryClass::One : EntryClass::Zero;
  }

  require_high_band(profile);
  const std::int64_t m = k + i - (p - 1);  // 1 <= m <= p-1
  if ((j - m) % 2 != 0) return EntryClass::Zero;

  if (m == p - 1 && j < m) return EntryClass::Unknown;
  if (m < p - 1) {
    const std::int64_t window =
        profile.d_max_table[static_cast<std::size_t>(m)];
    if (j < m || j > m + window) return EntryClass::Zero;
  }

  // lhs = a/p + frac((k+1) a/p), rhs = frac(h a/p) (+1 when h is a running
  // minimum); everything compared as numerators over p.
  const std::int64_t lhs = rd.a + frac_num(profile, k + 1);
  const std::int64_t rhs = frac_num(profile, h) + (h_in_e ? p : 0);
  if (lhs == rhs && pos_mod(k + 2 - h, p) != 0)
    raise(errc::internal, "fraction collision in the wrapped regime");
  if (h_in_e && lhs < frac_num(profile, h))
    raise(errc::internal, "running minimum produced a negative valuation");
  return lhs < rhs ? EntryClass::Nonzero : EntryClass::Zero;
}

ResiduePatternMatrix build_pattern_alpha(const OrderProfile& profile,
                                         std::int64_t k) {
  const std::int64_t p = profile.rd.p;
  ResiduePatternMatrix pattern;
  pattern.p = p;
  pattern.source_power = k;
  pattern.cells.assign(static_cast<std::size_t>(p * p), EntryClass::Zero);
  pattern.u_flag.assign(static_cast<std::size_t>(p * p), 0);

  for (std::int64_t i = 0; i < p; ++i)
    for (std::int64_t j = 0; j < p; ++j)
      pattern.cells[static_cast<std::size_t>(j * p + i)] =
          entry_class(profile, k, i, j);

  for (std::int64_t i = 0; i < p; ++i) {
    if (profile.n[static_cast<std::size_t>(i)] !=
        profile.nu[static_cast<std::size_t>(i)])
      continue;  // diagonal of M(1) vanishes here, no u term
    std::size_t at = static_cast<std::size_t>(i * p + i);
    pattern.u_flag[at] = 1;
    pattern.cells[at] = entry_nonzero(pattern.cells[at]) ||
                                pattern.cells[at] == EntryClass::Unknown
                            ? EntryClass::Unknown
                            : EntryClass::Nonzero;
  }
  return pattern;
}

namespace {

// Counts perfect matchings of the minor (rows and columns 1..p-1) that use
// only u-free nonzero cells, stopping at the cap. Columns are processed in
// scarcity order; p < 64 keeps the row set in one word.
std::int64_t count_u_free_matchings(const ResiduePatternMatrix& pattern,
                                    std::int64_t cap,
                                    std::vector<std::int64_t>* found) {
  const std::int64_t p = pattern.p;
  std::vector<std::vector<std::int64_t>> candidates(
      static_cast<std::size_t>(p));
  std::vector<std::int64_t> cols;
  for (std::int64_t i = 1; i < p; ++i) {
    for (std::int64_t j = 1; j < p; ++j)
      if (entry_nonzero(pattern.cell(j, i)) && !pattern.has_u(j, i))
        candidates[static_cast<std::size_t>(i)].push_back(j);
    cols.push_back(i);
  }
  std::sort(cols.begin(), cols.end(), [&](std::int64_t a, std::int64_t b) {
    return candidates[static_cast<std::size_t>(a)].size() <
           candidates[static_cast<std::size_t>(b)].size();
  });

  std::vector<std::int64_t> assignment(static_cast<std::size_t>(p), -1);
  std::uint64_t used_rows = 0;
  std::int64_t count = 0;

  auto walk = [&](auto&& self, std::size_t depth) -> void {
    if (count >= cap) return;
    if (depth == cols.size()) {
      ++count;
      if (found && count == 1) *found = assignment;
      return;
    }
    const std::int64_t col = cols[depth];
    for (std::int64_t row : candidates[static_cast<std::size_t>(col)]) {
      if (used_rows & (std::uint64_t{1} << row)) continue;
      used_rows |= std::uint64_t{1} << row;
      assignment[static_cast<std::size_t>(col)] = row;
      self(self, depth + 1);
      assignment[static_cast<std::size_t>(col)] = -1;
      used_rows &= ~(std::uint64_t{1} << row);
      if (count >= cap) return;
    }
  };
  walk(walk, 0);
  return count;
}

}  // namespace

SufficiencyWitness sufficiency_check(const OrderProfile& profile) {
  require_high_band(profile);
  const std::int64_t p = profile.rd.p;
  if (p >= 64)
    raise(errc::parameter, "matching enumeration supports p < 64");
  ContinuedFraction cf = cf_expand(profile.rd.a, p);
  const std::int64_t n = cf.length();
  if (n != 3 && n != 4)
    raise(errc::precondition_violated,
          "generator witness applies to expansion lengths 3 and 4, got " +
              std::to_string(n));

  const std::int64_t k = cf.convergents[2].second - 1;  // q_2 - 1
  ResiduePatternMatrix pattern = build_pattern_alpha(profile, k);

  // Corner structure: row 0 must be (u, 0, ..., 0).
  if (!pattern.has_u(0, 0) || !entry_nonzero(pattern.cell(0, 0)))
    raise(errc::structure_mismatch, "corner cell (0,0) is not the bare unit");
  for (std::int64_t i = 1; i < p; ++i)
    if (pattern.cell(0, i) != EntryClass::Zero)
      raise(errc::structure_mismatch, "first row has a stray nonzero cell");

  // The determinant factors through the corner; on the minor exactly one
  // matching must dodge every u cell, namely the shifted subdiagonal.
  std::vector<std::int64_t> assignment;
  std::int64_t count = count_u_free_matchings(pattern, 2, &assignment);
  if (count != 1)
    raise(errc::structure_mismatch,
          "expected exactly one u-free matching, found " +
              std::to_string(count));

  SufficiencyWitness witness;
  witness.k = k;
  witness.matching.assign(static_cast<std::size_t>(p), -1);
  witness.matching[0] = 0;
  for (std::int64_t i = 1; i < p; ++i) {
    const std::int64_t expected = (k + i <= p - 1) ? k + i : k + i - (p - 1);
    if (assignment[static_cast<std::size_t>(i)] != expected)
      raise(errc::structure_mismatch,
            "u-free matching deviates from the shifted subdiagonal");
    witness.matching[static_cast<std::size_t>(i)] = expected;
  }

  // Degree bookkeeping for the unit polynomial: at least one diagonal cell
  // carries u and at least one does not, pinning deg <= p-2 with a nonzero
  // constant term.
  bool diag_u = false, diag_free = false;
  for (std::int64_t i = 1; i < p; ++i) {
    if (profile.n[static_cast<std::size_t>(i)] ==
        profile.nu[static_cast<std::size_t>(i)])
      diag_u = true;
    else
      diag_free = true;
  }
  if (!diag_u || !diag_free)
    raise(errc::structure_mismatch, "diagonal unit structure is degenerate");
  witness.poly_degree_bound = p - 2;
  return witness;
}

NecessityCertificate necessity_check(const OrderProfile& profile) {
  require_high_band(profile);
  const std::int64_t p = profile.rd.p;
  ContinuedFraction cf = cf_expand(profile.rd.a, p);
  const std::int64_t n = cf.length();
  if (n < 5)
    raise(errc::precondition_violated,
          "obstruction certificate applies to expansion lengths >= 5, got " +
              std::to_string(n));

  const std::int64_t s = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
  const std::int64_t q_low = cf.convergents[static_cast<std::size_t>(2 * s - 2)].second;
  const std::int64_t q_mid = cf.convergents[static_cast<std::size_t>(2 * s - 1)].second;
  const std::int64_t q_high = cf.convergents[static_cast<std::size_t>(2 * s)].second;
  const std::int64_t a_top = cf.partials[static_cast<std::size_t>(2 * s)];

  NecessityCertificate cert;
  std::vector<std::int64_t> h_values;
  h_values.push_back(2 * q_low);
  for (std::int64_t c = 0; c <= a_top; ++c)
    h_values.push_back(q_low + c * q_mid + q_high);
  for (std::int64_t h : h_values) {
    if (h <= 0 || h >= p)
      raise(errc::structure_mismatch, "certificate residue out of range");
    cert.columns.push_back(p - h);
  }

  std::set<std::int64_t> rows;
  for (std::int64_t c = 0; c <= a_top; ++c)
    rows.insert(p - 1 - q_low - c * q_mid);
  cert.allowed_rows.assign(rows.begin(), rows.end());

  cert.cover_deficit = static_cast<std::int64_t>(cert.columns.size()) -
                       static_cast<std::int64_t>(cert.allowed_rows.size());
  if (cert.cover_deficit < 1)
    raise(errc::structure_mismatch, "certificate has no covering deficit");

  // Every summand matrix must vanish on the certified columns outside the
  // allowed rows; this is what kills every determinant term at once.
  for (std::int64_t column : cert.columns)
    for (std::int64_t k = 0; k < p; ++k)
      for (std::int64_t j = 0; j < p; ++j) {
        if (rows.count(j)) continue;
        if (entry_class(profile, k, column, j) != EntryClass::Zero)
          raise(errc::structure_mismatch,
                "unexpected nonzero cell at k=" + std::to_string(k) +
                    " column=" + std::to_string(column) +
                    " row=" + std::to_string(j));
      }
  return cert;
}

}  // namespace galord
