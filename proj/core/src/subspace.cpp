#include "hsseq/subspace.hpp"

#include <algorithm>

#include "hsseq/errors.hpp"

namespace hsseq {

namespace {

std::vector<std::size_t> leading_rows(const Matrix& basis) {
  std::vector<std::size_t> pivots(basis.cols(), 0);
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    std::size_t i = 0;
    while (i < basis.rows() && basis.at(i, j).is_zero()) ++i;
    pivots[j] = i;
  }
  return pivots;
}

} // namespace

Subspace Subspace::zero(std::size_t ambient, const Field& f) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(ambient, 0, f);
  return s;
}

Subspace Subspace::full(std::size_t ambient, const Field& f) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient, f);
  s.pivots_ = leading_rows(s.basis_);
  return s;
}

Subspace Subspace::span_of_columns(const Matrix& m) {
  // Reduced row echelon of the transpose, transposed back: the unique
  // canonical column basis of the span.
  RowEchelon re = row_echelon(m.transpose());
  std::size_t r = re.pivot_cols.size();
  Subspace s;
  s.ambient_ = m.rows();
  s.basis_ = Matrix(m.rows(), r, m.field());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) s.basis_.set(i, k, re.reduced.at(k, i));
  s.pivots_ = re.pivot_cols;
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const Field& f,
                              const std::vector<std::size_t>& coords) {
  std::vector<std::size_t> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(ambient, sorted.size(), f);
  std::size_t k = 0;
  for (std::size_t c : sorted) {
    if (c >= ambient) throw DimensionError("coordinate out of range");
    s.basis_.set(c, k++, Scalar::one(f));
  }
  s.pivots_ = sorted;
  return s;
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("vector/ambient mismatch");
  for (std::size_t j = 0; j < basis_.cols(); ++j) {
    const Scalar& c = v[pivots_[j]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!basis_.at(i, j).is_zero()) v[i] -= factor * basis_.at(i, j);
  }
  return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  std::vector<Scalar> r = reduce(v);
  for (const Scalar& c : r)
    if (!c.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient mismatch");
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  RowEchelon re = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : re.pivot_cols) is_pivot[p] = true;
  std::size_t k = m.cols() - re.pivot_cols.size();
  Matrix basis(m.cols(), k, m.field());
  std::size_t col = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    basis.set(j, col, Scalar::one(m.field()));
    for (std::size_t r = 0; r < re.pivot_cols.size(); ++r)
      basis.set(re.pivot_cols[r], col, -re.reduced.at(r, j));
    ++col;
  }
  return Subspace::span_of_columns(basis);
}

Subspace image_basis(const Matrix& m) { return Subspace::span_of_columns(m); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    throw DimensionError("subspace sum: ambient mismatch");
  return Subspace::span_of_columns(hstack(a.basis(), b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    throw DimensionError("subspace intersection: ambient mismatch");
  // Solve A x + B y = 0; the intersection is spanned by the vectors A x.
  Subspace pairs = kernel_basis(hstack(a.basis(), b.basis()));
  Matrix x_part(a.dim(), pairs.dim(), a.field());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < pairs.dim(); ++j) x_part.set(i, j, pairs.basis().at(i, j));
  return Subspace::span_of_columns(a.basis() * x_part);
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.rows())
    throw DimensionError("preimage: subspace must live in the codomain");
  // m v = S w  <=>  (v, w) in ker [m | -S]; project onto the v block.
  Subspace pairs = kernel_basis(hstack(m, -s.basis()));
  Matrix v_part(m.cols(), pairs.dim(), m.field());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < pairs.dim(); ++j) v_part.set(i, j, pairs.basis().at(i, j));
  return Subspace::span_of_columns(v_part);
}

Matrix coset_representatives(const Subspace& sub, const Subspace& quot_by) {
  std::size_t extra = sub.dim() - quot_by.dim();
  Matrix reps(sub.ambient_dim(), extra, sub.field());
  Matrix accumulated = quot_by.basis();
  std::size_t found = 0;
  for (std::size_t j = 0; j < sub.dim() && found < extra; ++j) {
    std::vector<Scalar> cand = sub.basis().column(j);
    Matrix trial = hstack(accumulated, Matrix(sub.ambient_dim(), 1, sub.field()));
    trial.set_column(accumulated.cols(), cand);
    if (rank(trial) > accumulated.cols()) {
      reps.set_column(found++, cand);
      accumulated = trial;
    }
  }
  return reps;
}

Matrix induced_map_on_quotients(const Matrix& m, const Subspace& dom_sub,
                                const Subspace& dom_quot_by, const Subspace& cod_sub,
                                const Subspace& cod_quot_by) {
  if (!dom_sub.contains(dom_quot_by))
    throw QuotientPreconditionError("induced map: dom_quot_by is not contained in dom_sub");
  if (!cod_sub.contains(cod_quot_by))
    throw QuotientPreconditionError("induced map: cod_quot_by is not contained in cod_sub");
  for (std::size_t j = 0; j < dom_sub.dim(); ++j)
    if (!cod_sub.contains(m.apply(dom_sub.basis().column(j))))
      throw QuotientPreconditionError("induced map: m does not map dom_sub into cod_sub");
  for (std::size_t j = 0; j < dom_quot_by.dim(); ++j)
    if (!cod_quot_by.contains(m.apply(dom_quot_by.basis().column(j))))
      throw QuotientPreconditionError(
          "induced map: m does not map dom_quot_by into cod_quot_by");

  Matrix dom_reps = coset_representatives(dom_sub, dom_quot_by);
  Matrix cod_reps = coset_representatives(cod_sub, cod_quot_by);
  std::size_t dim_dom = dom_reps.cols(), dim_cod = cod_reps.cols();

  Matrix result(dim_cod, dim_dom, m.field());
  if (dim_dom == 0 || m.rows() == 0) return result;
  Matrix frame = hstack(cod_reps, cod_quot_by.basis());
  for (std::size_t j = 0; j < dim_dom; ++j) {
    std::vector<Scalar> w = m.apply(dom_reps.column(j));
    LinearSolution sol = solve(frame, w);
    if (!sol.solvable)
      throw QuotientPreconditionError("induced map: image escapes the codomain frame");
    for (std::size_t i = 0; i < dim_cod; ++i) result.set(i, j, sol.x[i]);
  }
  return result;
}

} // namespace hsseq
