#ifndef HSSEQ_FREE_ALGEBRA_HPP
#define HSSEQ_FREE_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsseq/matrix.hpp"

namespace hsseq {

/// Element of the free associative algebra k{x_1,...,x_m}: a k-linear
/// combination of words in the generators. Words are kept sorted with
/// like terms merged and zero coefficients dropped.
class NcPolynomial {
public:
  using Word = std::vector<std::uint32_t>;

  NcPolynomial() = default;
  explicit NcPolynomial(const Field& f) : field_(f) {}

  static NcPolynomial zero(const Field& f) { return NcPolynomial(f); }
  static NcPolynomial unit(const Field& f);
  static NcPolynomial generator(std::uint32_t i, const Field& f);

  const Field& field() const { return field_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Scalar& c);

  NcPolynomial operator-() const;
  friend NcPolynomial operator+(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator-(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator*(const Scalar& c, const NcPolynomial& p);
  /// ab - ba.
  friend NcPolynomial bracket(const NcPolynomial& a, const NcPolynomial& b);

  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  Scalar constant_term() const;
  /// Coefficients of the length-one words, indexed by generator.
  std::vector<Scalar> linear_part(std::size_t num_generators) const;

  /// Writes the polynomial (which must have zero constant term) as
  /// sum_j u_j x_j by splitting the last letter off every word; entry j
  /// holds the left coefficient u_j of x_j.
  std::vector<NcPolynomial> left_normal_form(std::size_t num_generators) const;

  /// Image under the algebra derivation sending each generator to the
  /// given polynomial.
  NcPolynomial apply_derivation(const std::vector<NcPolynomial>& images) const;

  /// Value of the polynomial under the algebra map sending generator i to
  /// gen_matrices[i] and the empty word to the identity.
  Matrix evaluate(const std::vector<Matrix>& gen_matrices, std::size_t dim) const;

  std::string str(const std::vector<std::string>& generator_labels) const;

private:
  Field field_;
  std::map<Word, Scalar> terms_;
};

/// Parses a Lie expression over the given generator labels: sums and
/// differences of terms "c", "c*atom" or "atom", where an atom is a
/// generator, a bracket [expr,expr], or a parenthesized expression.
/// Constants other than 0 are rejected (brackets of generators never
/// produce them). Returns the expansion in the free associative algebra.
NcPolynomial parse_lie_expression(const std::string& text,
                                  const std::vector<std::string>& generator_labels,
                                  const Field& f);

} // namespace hsseq

#endif
