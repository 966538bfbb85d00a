#ifndef HSSEQ_FIELD_HPP
#define HSSEQ_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "hsseq/errors.hpp"

namespace hsseq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ground field: the rationals or a prime field F_p.
class Field {
public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for Q, p for F_p.
  std::uint32_t characteristic() const { return p_; }

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact scalar tagged with its field. Rational values are kept in
/// lowest terms with positive denominator; F_p values as the canonical
/// representative in [0, p). Arithmetic never rounds.
class Scalar {
public:
  /// Rational zero. (Vectors of scalars need a default state.)
  Scalar() = default;

  static Scalar zero(const Field& f) { return Scalar(f, Rational(0)); }
  static Scalar one(const Field& f) { return Scalar(f, Rational(1)); }
  static Scalar of(long v, const Field& f) { return Scalar(f, Rational(v)); }
  /// Canonicalizes v into f (mod-p reduction for prime fields; the
  /// denominator must be invertible there).
  static Scalar of(const Rational& v, const Field& f) { return Scalar(f, v); }
  static Scalar fraction(long num, long den, const Field& f);

  const Field& field() const { return field_; }
  const Rational& value() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "a/b" or "a"; F_p values print their canonical representative.
  std::string str() const;

  /// Parses "a", "-a", or "a/b" into the given field.
  static Scalar parse(const std::string& text, const Field& f);

private:
  Scalar(const Field& f, const Rational& v);
  void check_same_field(const Scalar& o) const;

  Field field_;
  Rational v_;
};

} // namespace hsseq

#endif
