#ifndef HSSEQ_MATRIX_HPP
#define HSSEQ_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hsseq/field.hpp"

namespace hsseq {

/// Dense matrix over a single ground field. Row-major storage; matrices
/// act on column vectors from the left. Values are immutable in spirit:
/// every operation returns a fresh matrix.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const Field& f);

  static Matrix identity(std::size_t n, const Field& f);
  static Matrix zero(std::size_t rows, std::size_t cols, const Field& f) {
    return Matrix(rows, cols, f);
  }
  /// Row-major integer literals, mainly for tests and builders.
  static Matrix of_rows(const Field& f,
                        std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add_to(std::size_t i, std::size_t j, const Scalar& v);

  Matrix transpose() const;
  Matrix operator-() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& m);

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Commutator a*b - b*a.
  friend Matrix commutator(const Matrix& a, const Matrix& b);

  std::vector<Scalar> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Scalar>& v);

  /// Copies src into this matrix with top-left corner at (i0, j0).
  void set_block(std::size_t i0, std::size_t j0, const Matrix& src);

  std::string str() const;

private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;
};

/// Side-by-side concatenation \[a | b\]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, const Field& f);
/// copies times copies of m along the diagonal.
Matrix block_diagonal(const Matrix& m, std::size_t copies);

/// Result of Gauss-Jordan elimination.
struct RowEchelon {
  Matrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivot order is the fixed column order, first
/// nonzero entry wins; exact arithmetic needs no pivoting heuristics.
RowEchelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One solution x of a x = b with free coordinates set to zero, or
/// nothing when the system is inconsistent.
struct LinearSolution {
  bool solvable = false;
  std::vector<Scalar> x;
};
LinearSolution solve(const Matrix& a, const std::vector<Scalar>& b);

} // namespace hsseq

#endif
