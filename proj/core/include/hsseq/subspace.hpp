#ifndef HSSEQ_SUBSPACE_HPP
#define HSSEQ_SUBSPACE_HPP

#include <vector>

#include "hsseq/matrix.hpp"

namespace hsseq {

/// A subspace of k^n, held as the matrix whose columns form its basis.
/// The basis is kept in reduced column echelon form (columns carry a
/// leading 1 at strictly increasing pivot rows, with zeros at every
/// other column's pivot row), so equal subspaces compare bit-for-bit.
class Subspace {
public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient, const Field& f);
  static Subspace full(std::size_t ambient, const Field& f);
  /// Span of the columns of m, canonicalized.
  static Subspace span_of_columns(const Matrix& m);
  /// Span of the coordinate axes listed in coords.
  static Subspace coordinate(std::size_t ambient, const Field& f,
                             const std::vector<std::size_t>& coords);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Field& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  /// Pivot row of each basis column, strictly increasing.
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  /// Residue of v modulo this subspace (v minus its projection along the
  /// pivot coordinates). Zero iff v lies in the subspace.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);

/// Smallest subspace containing both arguments.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// { v : m v in s }. Always contains ker(m).
Subspace preimage(const Matrix& m, const Subspace& s);

/// Coset representatives completing quot_by to sub: columns of sub's
/// canonical basis are scanned in order and kept greedily whenever they
/// are independent of quot_by plus the columns already kept.
Matrix coset_representatives(const Subspace& sub, const Subspace& quot_by);

/// The matrix of the map dom_sub/dom_quot_by -> cod_sub/cod_quot_by
/// induced by m, written in the coset-representative bases chosen by
/// coset_representatives. Throws QuotientPreconditionError naming the
/// inclusion that fails when the map is not well defined.
Matrix induced_map_on_quotients(const Matrix& m, const Subspace& dom_sub,
                                const Subspace& dom_quot_by, const Subspace& cod_sub,
                                const Subspace& cod_quot_by);

} // namespace hsseq

#endif
