#pragma once

// Cayley's Omega differential operators and their evaluation on products of
// per-copy polynomial factors.
//
// Omega_g = det(d/d g_i^(j)) over copies j = 1..3, expanded as the six signed
// permutation monomials d g_{s(1)}^(1) d g_{s(2)}^(2) d g_{s(3)}^(3).
//
// The factorized evaluator exploits that derivatives in copy j act only on a
// factor depending solely on copy j: each Omega^power expands into signed
// permutation tuples, the per-copy derivative multi-indices are distributed,
// each fully differentiated per-copy residue is computed once (memoised over
// the multi-index lattice), and the sign-weighted products are summed.  It is
// contractually identical to omega_apply + traced() on the expanded product.

#include <complex>
#include <span>
#include <vector>

#include "triq/poly.hpp"

namespace triq {

/// Apply Omega_g^power to an arbitrary polynomial (naive termwise expansion,
/// 6^power signed derivative monomials).
SparsePoly omega_apply(const SparsePoly& p, Group g, int power = 1);

struct OmegaOp {
  Group group;
  int power = 1;
};

/// Factorized Omega application over per-copy factors; factor k (0-based)
/// may involve only copy k+1.  Returns the traced residue polynomial.
SparsePoly omega_trace_product(std::span<const SparsePoly> per_copy_factors,
                               std::span<const OmegaOp> ops);

/// Scalar form of omega_trace_product.  Requires the result to be degree-0;
/// a group with leftover degree raises std::invalid_argument naming it.
Complex factorized_omega_trace(std::span<const SparsePoly> per_copy_factors,
                               std::span<const OmegaOp> ops);

}  // namespace triq
