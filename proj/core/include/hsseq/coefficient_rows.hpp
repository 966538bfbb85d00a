#ifndef HSSEQ_COEFFICIENT_ROWS_HPP
#define HSSEQ_COEFFICIENT_ROWS_HPP

#include <string>
#include <vector>

#include "hsseq/ce_complex.hpp"
#include "hsseq/split_extension.hpp"

namespace hsseq {

/// The graded coefficient spaces R^q attached to a split extension: the
/// homomorphisms from the kernel resolution into the coefficients, with
/// their vertical differentials and the action of the quotient. Every
/// kernel family produces this shape; the spectral engine consumes it.
struct CoefficientRows {
  Field field;
  std::size_t max_q = 0;
  std::vector<std::size_t> dims;              // q = 0 .. max_q
  std::vector<std::string> descriptions;      // per q, for reports
  std::vector<Matrix> d_vert;                 // d[q] : R^q -> R^{q+1}; top one has 0 rows
  std::vector<std::vector<Matrix>> h_action;  // [q][quotient generator]

  std::size_t dim(std::size_t q) const { return q < dims.size() ? dims[q] : 0; }
};

CoefficientRows rows_finite_dim(const SplitExtension& ext);
CoefficientRows rows_free_kernel(const SplitExtension& ext);
CoefficientRows rows_direct_sum(const SplitExtension& ext);
CoefficientRows rows_free_product(const SplitExtension& ext);

/// Dispatch on the kernel family.
CoefficientRows coefficient_rows(const SplitExtension& ext);

/// Structural identities every row family satisfies: the vertical
/// differential squares to zero, the quotient action commutes with it,
/// and per degree the action matrices represent the quotient algebra.
/// Throws InternalInvariantError on failure.
void check_rows_invariants(const CoefficientRows& rows, const LieAlgebra& h);

/// Cohomology of the rows under d_vert, one module over the quotient per
/// degree (the induced action on ker/im in deterministic coset bases).
std::vector<LieModule> row_cohomology_modules(const CoefficientRows& rows,
                                              const LieAlgebra& h);

} // namespace hsseq

#endif
