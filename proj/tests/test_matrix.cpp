#include <doctest.h>

#include "hsseq/errors.hpp"
#include "hsseq/matrix.hpp"

using namespace hsseq;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("rank on small cases") {
  CHECK(rank(Matrix::identity(2, Q)) == 2);
  CHECK(rank(Matrix::zero(3, 4, Q)) == 0);
  CHECK(rank(Matrix::of_rows(Q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("row echelon produces a reduced form") {
  Matrix m = Matrix::of_rows(Q, {{2, 4, 6}, {1, 2, 4}});
  RowEchelon re = row_echelon(m);
  CHECK(re.pivot_cols == std::vector<std::size_t>{0, 2});
  CHECK(re.reduced == Matrix::of_rows(Q, {{1, 2, 0}, {0, 0, 1}}));
}

TEST_CASE("matrix product and commutator") {
  Matrix a = Matrix::of_rows(Q, {{1, 1}, {0, 1}});
  Matrix b = Matrix::of_rows(Q, {{1, 0}, {1, 1}});
  CHECK(a * b == Matrix::of_rows(Q, {{2, 1}, {1, 1}}));
  CHECK(commutator(a, b) == Matrix::of_rows(Q, {{1, 0}, {0, -1}}));
  CHECK_THROWS_AS(a * Matrix::zero(3, 3, Q), DimensionError);
}

TEST_CASE("solve returns a particular solution or reports inconsistency") {
  Matrix a = Matrix::of_rows(Q, {{1, 2}, {0, 0}});
  LinearSolution s = solve(a, {Scalar::of(3, Q), Scalar::zero(Q)});
  REQUIRE(s.solvable);
  CHECK(a.apply(s.x) == std::vector<Scalar>{Scalar::of(3, Q), Scalar::zero(Q)});
  LinearSolution t = solve(a, {Scalar::zero(Q), Scalar::one(Q)});
  CHECK_FALSE(t.solvable);
}

TEST_CASE("block helpers") {
  Matrix a = Matrix::of_rows(Q, {{1, 2}});
  Matrix d = block_diagonal(a, 2);
  CHECK(d == Matrix::of_rows(Q, {{1, 2, 0, 0}, {0, 0, 1, 2}}));
  CHECK(hstack(a, Matrix::identity(1, Q)) == Matrix::of_rows(Q, {{1, 2, 1}}));
}

TEST_CASE("zero-sized matrices behave") {
  Matrix empty(0, 3, Q);
  CHECK(rank(empty) == 0);
  CHECK(empty.is_zero());
  Matrix tall(3, 0, Q);
  CHECK((empty * tall).rows() == 0);
  CHECK(block_diagonal(empty, 2).cols() == 6);
}
