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
#ifndef GALORD_PATTERNS_HPP
#define GALORD_PATTERNS_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "galord/assocorder.hpp"

namespace galord {

/// Residue class of one matrix entry modulo the maximal ideal.
/// One is a Nonzero whose residue is known to be exactly 1; Unknown marks
/// entries whose vanishing depends on data the valuation bookkeeping cannot
/// see (the top-power remainder row, or superpositions with the symbolic
/// unit u).
enum class EntryClass { Zero, Nonzero, One, Unknown };

bool entry_nonzero(EntryClass c);  // One or Nonzero

/// Residue class of entry (row j, column i) of the matrix of multiplication
/// by pi^{-nu_k} w^k between the order bases. Pure function of the profile
/// and the indices; the regime k+i > p-1 requires the high band
/// nu_{p-1} = e + (p-1)/2.
EntryClass entry_class(const OrderProfile& profile, std::int64_t k,
                       std::int64_t i, std::int64_t j);

/// p x p residue pattern of M(u + pi^{-nu_k} w^k) for the symbolic unit u:
/// the k-matrix pattern superposed with u on the diagonal cells where the
/// order exponents coincide (n_i = nu_i). A diagonal cell receiving both u
/// and a Nonzero becomes Unknown.
struct ResiduePatternMatrix {
  std::int64_t p = 0;
  std::int64_t source_power = 0;  // the k of the generator candidate
  std::vector<EntryClass> cells;  // row-major, cell(j, i) at j*p + i
  std::vector<std::uint8_t> u_flag;

  EntryClass cell(std::int64_t j, std::int64_t i) const {
    return cells[static_cast<std::size_t>(j * p + i)];
  }
  bool has_u(std::int64_t j, std::int64_t i) const {
    return u_flag[static_cast<std::size_t>(j * p + i)] != 0;
  }
};

ResiduePatternMatrix build_pattern_alpha(const OrderProfile& profile,
                                         std::int64_t k);

/// Witness that u + pi^{-nu_k} w^k generates for a suitable unit u:
/// k = q_2 - 1, the unique perfect matching of nonzero cells that touches u
/// only in the forced corner cell (0,0), and the degree bound on the
/// u-polynomial carrying every other determinant term.
struct SufficiencyWitness {
  std::int64_t k = 0;
  std::vector<std::int64_t> matching;  // matching[i] = row matched to column i
  std::int64_t poly_degree_bound = 0;  // <= p-2
};

/// Certificate that no candidate generates: a set of columns whose possibly
/// nonzero cells, across every summand matrix, live in strictly fewer rows.
struct NecessityCertificate {
  std::vector<std::int64_t> columns;
  std::vector<std::int64_t> allowed_rows;
  std::int64_t cover_deficit = 0;  // |columns| - |allowed_rows| >= 1
};

using Certificate = std::variant<SufficiencyWitness, NecessityCertificate>;

/// Expansion length 3 or 4 only (PreconditionViolated otherwise); high band
/// required. Throws StructureMismatch if the computed pattern does not carry
/// exactly one u-free matching, the structural one.
SufficiencyWitness sufficiency_check(const OrderProfile& profile);

/// Expansion length >= 5 only; high band required. Verifies cell by cell
/// that the certificate columns vanish outside the allowed rows for every
/// summand index k, and that the row set is one short of the column set.
NecessityCertificate necessity_check(const OrderProfile& profile);

}  // namespace galord

#endif
