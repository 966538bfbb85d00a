#ifndef HSSEQ_CE_COMPLEX_HPP
#define HSSEQ_CE_COMPLEX_HPP

#include <vector>

#include "hsseq/exterior.hpp"
#include "hsseq/lie_algebra.hpp"
#include "hsseq/subspace.hpp"

namespace hsseq {

/// Matrix of the cochain differential d^q on Hom_k(Lambda^q L, M),
///   (d f)(x_0 ^ ... ^ x_q) = sum_i (-1)^i x_i f(... x_i omitted ...)
///                          + sum_{i<j} (-1)^{i+j} f([x_i,x_j] ^ ... x_i, x_j omitted ...).
/// Basis of C^q: exterior monomial index varies slowest, module coordinate
/// fastest, so C^q has dimension C(dim L, q) * dim M.
Matrix ce_cochain_differential(const LieModule& M, std::size_t q);

/// The full cochain complex of a finite-dimensional Lie algebra with
/// module coefficients. differentials[q] maps C^q to C^{q+1}; the one at
/// the top degree lands in the zero space.
struct CochainComplex {
  std::vector<std::size_t> space_dims;  // q = 0 .. dim L
  std::vector<Matrix> differentials;    // q = 0 .. dim L
};

CochainComplex ce_cochain_complex(const LieModule& M);

struct CohomologyDegree {
  std::size_t betti = 0;
  Subspace cocycles;
  Subspace coboundaries;
};

/// Cohomology of the algebra acting in M, one entry per degree 0..dim L.
std::vector<CohomologyDegree> cohomology(const LieModule& M);

std::vector<std::size_t> betti_numbers(const LieModule& M);

/// For each generator of an outer algebra acting on L by the derivations
/// phi and on M by rho_out, the matrix of f |-> rho_out f - f (derivation
/// extended to Lambda^q) on Hom_k(Lambda^q L, M). This is the cochain
/// shadow of the module structure on Hom; it commutes with the cochain
/// differential whenever (phi, rho_out) come from a split extension.
std::vector<Matrix> restrict_action_to_cochains(const LieModule& M,
                                                const std::vector<Matrix>& phi,
                                                const std::vector<Matrix>& rho_out,
                                                std::size_t q);

/// Action induced on H^q(L, M) by restrict_action_to_cochains: one matrix
/// per outer generator, written in the deterministic coset bases of the
/// subspace layer. Throws InternalInvariantError when the cochain action
/// fails to preserve cocycles or coboundaries.
std::vector<Matrix> induced_action_on_cohomology(const LieModule& M,
                                                 const std::vector<Matrix>& phi,
                                                 const std::vector<Matrix>& rho_out,
                                                 std::size_t q);

} // namespace hsseq

#endif
