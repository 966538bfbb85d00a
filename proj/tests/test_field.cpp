#include <doctest.h>

#include "hsseq/errors.hpp"
#include "hsseq/field.hpp"

using namespace hsseq;

TEST_CASE("rational scalars stay in lowest terms with positive denominator") {
  Field q = Field::rationals();
  Scalar a = Scalar::fraction(2, 4, q);
  CHECK(a.str() == "1/2");
  Scalar b = Scalar::fraction(3, -6, q);
  CHECK(b.str() == "-1/2");
  CHECK((a + b).is_zero());
  CHECK((a * Scalar::of(4, q)).str() == "2");
  CHECK(Scalar::fraction(1, 3, q).inverse().str() == "3");
}

TEST_CASE("prime field arithmetic uses canonical representatives") {
  Field f5 = Field::prime(5);
  Scalar a = Scalar::of(7, f5);
  CHECK(a.str() == "2");
  CHECK((-a).str() == "3");
  Scalar inv = Scalar::of(3, f5).inverse();
  CHECK((inv * Scalar::of(3, f5)).is_one());
  // denominators are inverted on entry
  CHECK(Scalar::fraction(1, 2, f5).str() == "3");
  CHECK_THROWS_AS(Scalar::fraction(1, 5, f5), Error);
}

TEST_CASE("field constructors reject composite characteristics") {
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK(Field::prime(2).name() == "F2");
  CHECK(Field::rationals().name() == "Q");
}

TEST_CASE("mixing fields is an error") {
  Scalar a = Scalar::one(Field::rationals());
  Scalar b = Scalar::one(Field::prime(3));
  CHECK_THROWS_AS(a + b, FieldMismatchError);
}

TEST_CASE("scalar parsing") {
  Field q = Field::rationals();
  CHECK(Scalar::parse("-3/7", q).str() == "-3/7");
  CHECK(Scalar::parse("10", q).str() == "10");
  CHECK(Scalar::parse("4/6", q).str() == "2/3");
  CHECK_THROWS_AS(Scalar::parse("", q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0", q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("a", q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1.5", q), ParseError);
  CHECK(Scalar::parse("7/3", Field::prime(5)).str() == "4");
}

TEST_CASE("exhaustive F_p arithmetic against integer arithmetic") {
  for (std::uint32_t p : {2u, 3u}) {
    Field f = Field::prime(p);
    for (long a = 0; a < static_cast<long>(p); ++a)
      for (long b = 0; b < static_cast<long>(p); ++b) {
        CHECK((Scalar::of(a, f) + Scalar::of(b, f)).str() == std::to_string((a + b) % p));
        CHECK((Scalar::of(a, f) * Scalar::of(b, f)).str() == std::to_string((a * b) % p));
      }
  }
}
