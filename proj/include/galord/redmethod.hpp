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
#ifndef GALORD_REDMETHOD_HPP
#define GALORD_REDMETHOD_HPP

#include <cstdint>
#include <vector>

#include "galord/numutil.hpp"

namespace galord {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

RatMatrix rat_identity(std::int64_t n);
RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
/// Exact inverse; requires a square nonsingular input.
RatMatrix rat_inverse(const RatMatrix& m);
bool rat_is_p_integral(const RatMatrix& m, std::int64_t p);
/// det(m) mod p for a p-integral matrix; nonzero exactly when det(m) is a
/// p-local unit.
std::int64_t det_mod_p(const RatMatrix& m, std::int64_t p);

/// Stacked matrix of an action on a rank-n lattice: n blocks of size n x n,
/// block j holding the coordinates of the action of each basis operator on
/// the j-th lattice generator. Entries are exact rationals whose denominators
/// are coprime to p (the working scalars are the p-local integers).
struct ActionMatrix {
  std::int64_t p = 0;
  std::int64_t n = 0;
  RatMatrix rows;  // n*n rows of width n; row j*n + k is row k of block j
};

/// Validates shape and p-integrality.
ActionMatrix make_action_matrix(std::int64_t p, std::int64_t n, RatMatrix rows);

/// Outcome of the reduction U * M = [D; 0] with U unimodular over the
/// p-local integers. The input stack is retained so the certificate can be
/// re-verified from the pair alone.
struct ReducedPair {
  std::int64_t p = 0;
  std::int64_t n = 0;
  RatMatrix D;  // n x n, rows form a p-local basis of the row lattice of M
  RatMatrix U;  // n^2 x n^2 transformation certificate
  RatMatrix M;  // the stacked input
};

/// Brings the stack to [D; 0] form. Rows that are p-locally independent of
/// the pivots collected so far are adopted unchanged (so a stack whose
/// nonzero rows already form a unimodular square matrix is reduced by row
/// exchanges alone); dependent rows are either eliminated by p-integral
/// multiples of the pivots or, when the dependency has a denominator
/// divisible by p, exchanged against the pivot of smallest coefficient
/// valuation, which keeps the pivot set a p-local basis of the processed
/// row lattice. Throws RankDeficient when the stack has rank < n.
ReducedPair reduce(const ActionMatrix& m);

/// Checks U * M == [D; 0] entrywise and that det(U) is a p-local unit.
bool verify_certificate(const ReducedPair& rp);

/// Columns of D^{-1}; each is the coordinate vector of one basis element of
/// the order cut out by the lattice. Also asserts that the stacked action
/// applied to every column lands in p-integral coordinates.
std::vector<RatVector> basis_from_reduced(const ReducedPair& rp);

/// Synthetic maximal-case action: the basis operators act diagonally on the
/// lattice generators with integer eigenvalues lambda_j, where lambda_0 = 0
/// and lambda_1..lambda_{p-1} are pairwise distinct units mod p. The row
/// matrix (lambda_j^i)_{j,i} is then a unimodular Vandermonde.
struct MaximalModel {
  std::int64_t p = 0;
  std::vector<std::int64_t> lambdas;
};

MaximalModel make_maximal_model(std::int64_t p,
                                std::vector<std::int64_t> lambdas);

/// The stacked action of the model: block j has a single nonzero row j equal
/// to (1, lambda_j, lambda_j^2, ...).
ActionMatrix maximal_action(const MaximalModel& mm);

/// The row-Vandermonde (lambda_j^i), row j, column i.
RatMatrix vandermonde(const MaximalModel& mm);

/// Certifies that the basis cut out by the model is a family of pairwise
/// orthogonal idempotents: products are computed honestly in the polynomial
/// model (powers >= p of the generator are re-expanded through the action)
/// and compared against delta_ij coordinates, and the action of each product
/// on every lattice generator is re-checked to be delta_ik delta_jk.
bool idempotent_check(const MaximalModel& mm);

}  // namespace galord

#endif
