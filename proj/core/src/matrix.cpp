#include "hsseq/matrix.hpp"

#include <sstream>

#include "hsseq/errors.hpp"

namespace hsseq {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::of_rows(const Field& f,
                       std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c, f);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged rows in matrix literal");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar::of(v, f));
    ++i;
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.field() != field_) throw FieldMismatchError("matrix entry field mismatch");
  e_[i * cols_ + j] = v;
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
  e_[i * cols_ + j] += v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_, field_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix addition shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix subtraction shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatchError("matrix product field mismatch");
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product shape mismatch: " + std::to_string(a.cols_) +
                         " vs " + std::to_string(b.rows_));
  Matrix r(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.add_to(i, j, aik * bkj);
      }
    }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r = m;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] *= c;
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool Matrix::is_zero() const {
  for (const Scalar& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_) return false;
  for (std::size_t k = 0; k < a.e_.size(); ++k)
    if (a.e_[k] != b.e_[k]) return false;
  return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> v(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const std::vector<Scalar>& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) set(i, j, v[i]);
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& src) {
  if (i0 + src.rows() > rows_ || j0 + src.cols() > cols_)
    throw DimensionError("block does not fit");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) set(i0 + i, j0 + j, src.at(i, j));
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, const Field& f) {
  std::size_t cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Matrix r(rows, cols, f);
  std::size_t j0 = 0;
  for (const auto& p : parts) {
    r.set_block(0, j0, p);
    j0 += p.cols();
  }
  return r;
}

Matrix block_diagonal(const Matrix& m, std::size_t copies) {
  Matrix r(m.rows() * copies, m.cols() * copies, m.field());
  for (std::size_t k = 0; k < copies; ++k) r.set_block(k * m.rows(), k * m.cols(), m);
  return r;
}

RowEchelon row_echelon(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a.at(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Scalar t = a.at(row, j);
        a.set(row, j, a.at(p, j));
        a.set(p, j, t);
      }
    Scalar inv = a.at(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.set(row, j, inv * a.at(row, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar factor = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.set(i, j, a.at(i, j) - factor * a.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return RowEchelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivot_cols.size(); }

LinearSolution solve(const Matrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw DimensionError("rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug.set(i, a.cols(), b[i]);
  RowEchelon re = row_echelon(aug);
  LinearSolution sol;
  for (std::size_t p : re.pivot_cols)
    if (p == a.cols()) return sol;  // pivot in rhs column: inconsistent
  sol.solvable = true;
  sol.x.assign(a.cols(), Scalar::zero(a.field()));
  for (std::size_t r = 0; r < re.pivot_cols.size(); ++r)
    sol.x[re.pivot_cols[r]] = re.reduced.at(r, a.cols());
  return sol;
}

} // namespace hsseq
