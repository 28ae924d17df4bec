#pragma once

#include <vector>

#include "partition.hpp"

namespace simcore {

// Residue-count sequence x = (x_0, ..., x_k) whose weak descents drive the
// major-index statistics; x_0 = 0 for every core.
using DescentVector = std::vector<i64>;

// x_i = number of first-column hooks congruent to i mod n (type A,
// residues 0..n-1).
DescentVector descent_vector_A(const Partition& p, i64 n);

// Signed residue counts of the diagonal arm lengths (type C): for
// 1 <= i <= n, x_i = #{w = i} - #{w = 2n-i+1} with residues mod 2n taken in
// {1..2n} (a multiple of 2n counts as 2n).
DescentVector descent_vector_C(const Partition& p, i64 n);

// maj_A = sum of (2i - x_i) over weak descents x_{i-1} >= x_i, i in 1..n-1.
i64 maj_A(const Partition& p, i64 n);

// maj_C = 2 * sum of (2i - x_i - 1) over weak descents, i in 1..n; always even.
i64 maj_C(const Partition& p, i64 n);

// Diagonal arm lengths w_i = (arm of the i-th diagonal box) + 1, strictly
// decreasing.  Requires a self-conjugate partition.
std::vector<i64> diagonal_arms(const Partition& p);

// Cells with hook length < b (a skew subdiagram), row-major order.
std::vector<Cell> b_boundary(const Partition& p, i64 b);

// For each residue class of first-column hooks mod a that occurs, the
// topmost row attaining it; ascending row indices.
std::vector<int> a_rows(const Partition& p, i64 a);

// Skew length: cells lying both in an a-row and in the b-boundary.
// Requires coprime a < b.
i64 skew_length(const Partition& p, i64 a, i64 b);

// (a-1)(b-1)/2 - skew_length.
i64 co_skew_length(const Partition& p, i64 a, i64 b);

}  // namespace simcore
