#include <doctest.h>

#include "hsseq/errors.hpp"
#include "hsseq/free_algebra.hpp"

using namespace hsseq;

namespace {
const Field Q = Field::rationals();
const std::vector<std::string> XY = {"x1", "x2"};
}

TEST_CASE("bracket words expand with [u,v] = uv - vu") {
  NcPolynomial p = parse_lie_expression("[x1,x2]", XY, Q);
  NcPolynomial expect = NcPolynomial::generator(0, Q) * NcPolynomial::generator(1, Q) -
                        NcPolynomial::generator(1, Q) * NcPolynomial::generator(0, Q);
  CHECK(p == expect);
  CHECK(parse_lie_expression("[x1,x1]", XY, Q).is_zero());
  CHECK(parse_lie_expression("[x1,x2] + [x2,x1]", XY, Q).is_zero());
}

TEST_CASE("parser handles coefficients, nesting and whitespace") {
  NcPolynomial p = parse_lie_expression(" 2/3*[x1,[x1,x2]] - x2 ", XY, Q);
  NcPolynomial x1 = NcPolynomial::generator(0, Q);
  NcPolynomial x2 = NcPolynomial::generator(1, Q);
  NcPolynomial expect =
      Scalar::fraction(2, 3, Q) * bracket(x1, bracket(x1, x2)) - x2;
  CHECK(p == expect);
  CHECK(parse_lie_expression("0", XY, Q).is_zero());
  CHECK_THROWS_AS(parse_lie_expression("x3", XY, Q), ParseError);
  CHECK_THROWS_AS(parse_lie_expression("1 + x1", XY, Q), ParseError);
  CHECK_THROWS_AS(parse_lie_expression("[x1 x2]", XY, Q), ParseError);
}

TEST_CASE("normal form merges and drops terms") {
  NcPolynomial p = parse_lie_expression("[x1,x2] - [x1,x2]", XY, Q);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  NcPolynomial q = parse_lie_expression("2*x1 + x1", XY, Q);
  REQUIRE(q.terms().size() == 1);
  CHECK(q.terms().begin()->second == Scalar::of(3, Q));
}

TEST_CASE("left normal form splits the last letter off") {
  // x1 x2 - x2 x1 = (x1) x2 - (x2) x1
  NcPolynomial p = parse_lie_expression("[x1,x2]", XY, Q);
  auto parts = p.left_normal_form(2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == -NcPolynomial::generator(1, Q));
  CHECK(parts[1] == NcPolynomial::generator(0, Q));

  NcPolynomial lin = parse_lie_expression("3*x1", XY, Q);
  auto lparts = lin.left_normal_form(2);
  CHECK(lparts[0].constant_term() == Scalar::of(3, Q));
  CHECK(lparts[1].is_zero());

  CHECK_THROWS_AS(NcPolynomial::unit(Q).left_normal_form(2), Error);
}

TEST_CASE("linear part") {
  NcPolynomial p = parse_lie_expression("2*x1 - x2 + [x1,x2]", XY, Q);
  auto lin = p.linear_part(2);
  CHECK(lin[0] == Scalar::of(2, Q));
  CHECK(lin[1] == Scalar::of(-1, Q));
}

TEST_CASE("derivations obey the Leibniz rule on expanded words") {
  // D(x1) = [x1,x2], D(x2) = 0
  std::vector<NcPolynomial> images = {parse_lie_expression("[x1,x2]", XY, Q),
                                      NcPolynomial::zero(Q)};
  NcPolynomial x1 = NcPolynomial::generator(0, Q);
  NcPolynomial x2 = NcPolynomial::generator(1, Q);
  NcPolynomial word = x1 * x2;
  CHECK(word.apply_derivation(images) == bracket(x1, x2) * x2);
  // the derivation of a bracket is the bracket rule
  NcPolynomial br = bracket(x1, x2);
  CHECK(br.apply_derivation(images) == bracket(bracket(x1, x2), x2));
}

TEST_CASE("matrix evaluation is multiplicative") {
  Matrix a = Matrix::of_rows(Q, {{0, 1}, {0, 0}});
  Matrix b = Matrix::of_rows(Q, {{1, 0}, {0, 2}});
  NcPolynomial p = parse_lie_expression("[x1,x2]", XY, Q);
  CHECK(p.evaluate({a, b}, 2) == commutator(a, b));
  CHECK(NcPolynomial::unit(Q).evaluate({a, b}, 2) == Matrix::identity(2, Q));
}
