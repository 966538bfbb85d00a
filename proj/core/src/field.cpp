#include "hsseq/field.hpp"

#include <cctype>
#include <cstdlib>

namespace hsseq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("characteristic must be prime, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

namespace {

// Canonical representative of num/den in F_p.
Rational reduce_mod_p(const Rational& v, std::uint32_t p) {
  Int num = numerator(v) % p;
  if (num < 0) num += p;
  Int den = denominator(v) % p;
  if (den == 0) throw Error("denominator of " + v.str() + " is not invertible in F" + std::to_string(p));
  // Extended Euclid for den^{-1} mod p; den is coprime to p here.
  std::int64_t a = den.convert_to<std::int64_t>(), m = p;
  std::int64_t x0 = 0, x1 = 1, b = m;
  while (a > 1) {
    std::int64_t q = a / b;
    std::int64_t t = b; b = a % b; a = t;
    t = x0; x0 = x1 - q * x0; x1 = t;
  }
  std::int64_t inv = ((x1 % m) + m) % m;
  Int r = (num * inv) % p;
  return Rational(r);
}

} // namespace

Scalar::Scalar(const Field& f, const Rational& v) : field_(f), v_(v) {
  if (!field_.is_rational()) v_ = reduce_mod_p(v_, field_.characteristic());
}

Scalar Scalar::fraction(long num, long den, const Field& f) {
  return Scalar(f, Rational(num) / Rational(den));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("scalars from " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  return Scalar(field_, Rational(1) / v_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  v_ += o.v_;
  if (!field_.is_rational()) v_ = reduce_mod_p(v_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  v_ -= o.v_;
  if (!field_.is_rational()) v_ = reduce_mod_p(v_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  v_ *= o.v_;
  if (!field_.is_rational()) v_ = reduce_mod_p(v_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  if (!field_.is_rational()) v_ = reduce_mod_p(v_, field_.characteristic());
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.v_ == b.v_;
}

std::string Scalar::str() const { return v_.str(); }

Scalar Scalar::parse(const std::string& text, const Field& f) {
  if (text.empty()) throw ParseError("empty scalar literal");
  std::size_t slash = text.find('/');
  auto parse_int = [](const std::string& s) -> Int {
    if (s.empty()) throw ParseError("empty integer literal");
    bool neg = s[0] == '-';
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("bad integer literal '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("bad integer literal '" + s + "'");
    Int v(s.substr(start));
    return neg ? Int(-v) : v;
  };
  if (slash == std::string::npos) return Scalar(f, Rational(parse_int(text)));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Scalar(f, Rational(num) / Rational(den));
}

} // namespace hsseq
