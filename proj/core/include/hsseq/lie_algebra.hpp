#ifndef HSSEQ_LIE_ALGEBRA_HPP
#define HSSEQ_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "hsseq/matrix.hpp"

namespace hsseq {

/// Outcome of an axiom check; empty problem list means valid.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;

  void fail(const std::string& what) {
    ok = false;
    problems.push_back(what);
  }
  std::string summary() const;
};

/// Structure constants c[i][j][k], meaning [e_i, e_j] = sum_k c[i][j][k] e_k.
class StructureConstants {
public:
  StructureConstants(std::size_t dim, const Field& f);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  /// Sets [e_i, e_j] and [e_j, e_i] = -[e_i, e_j] at once.
  void set_bracket(std::size_t i, std::size_t j, const std::vector<Scalar>& coeffs);

private:
  std::size_t dim_;
  Field field_;
  std::vector<Scalar> c_;
};

/// Antisymmetry (including alternating brackets, which matters in
/// characteristic 2) and the Jacobi identity on all basis triples.
ValidationReport validate_structure_constants(const StructureConstants& c,
                                              const std::vector<std::string>& labels);

/// Finite-dimensional Lie algebra given by structure constants on a fixed
/// ordered basis. Constructors validate eagerly and throw ValidationError;
/// every value of this type satisfies the axioms.
class LieAlgebra {
public:
  LieAlgebra(std::vector<std::string> basis_labels, StructureConstants c);

  /// Abelian algebra of the given dimension with default labels.
  static LieAlgebra abelian(std::size_t dim, const Field& f);

  std::size_t dim() const { return c_.dim(); }
  const Field& field() const { return c_.field(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& constants() const { return c_; }

  std::vector<Scalar> bracket(const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y) const;
  /// Matrix of ad(e_i).
  Matrix ad(std::size_t i) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
  std::vector<std::string> labels_;
  StructureConstants c_;
};

ValidationReport validate_algebra(const LieAlgebra& L);

/// Representation of a Lie algebra: one matrix per basis element, subject
/// to rho([x,y]) = rho(x) rho(y) - rho(y) rho(x). Validated on construction.
class LieModule {
public:
  LieModule(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> rho);

  static LieModule trivial(const LieAlgebra& algebra, std::size_t dim);
  static LieModule adjoint(const LieAlgebra& algebra);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  const std::vector<Matrix>& action() const { return rho_; }
  const Field& field() const { return algebra_.field(); }

  bool is_trivial() const;

private:
  LieAlgebra algebra_;
  std::size_t dim_;
  std::vector<Matrix> rho_;
};

ValidationReport validate_module(const LieAlgebra& algebra, std::size_t dim,
                                 const std::vector<Matrix>& rho);

/// An action of h on n by derivations: one dim(n) x dim(n) matrix per
/// h-basis element. Each matrix must be a derivation of n and the whole
/// assignment a Lie algebra homomorphism h -> Der(n).
class DerivationAction {
public:
  DerivationAction(LieAlgebra h, LieAlgebra n, std::vector<Matrix> phi);

  static DerivationAction zero(const LieAlgebra& h, const LieAlgebra& n);

  const LieAlgebra& source() const { return h_; }
  const LieAlgebra& target() const { return n_; }
  const Matrix& phi(std::size_t a) const { return phi_[a]; }
  const std::vector<Matrix>& matrices() const { return phi_; }

private:
  LieAlgebra h_, n_;
  std::vector<Matrix> phi_;
};

ValidationReport validate_derivation_action(const LieAlgebra& h, const LieAlgebra& n,
                                            const std::vector<Matrix>& phi);

/// The semidirect product n x| h with ordered basis (n-basis, then
/// h-basis) and bracket
///   [(s,a),(t,b)] = ([s,t] + phi(a)t - phi(b)s, [a,b]).
LieAlgebra semidirect_sum(const LieAlgebra& n, const LieAlgebra& h,
                          const DerivationAction& phi);

/// Basis of Der(n) inside gl(n), found by solving the derivation
/// equations exactly.
std::vector<Matrix> derivation_algebra_basis(const LieAlgebra& n);

} // namespace hsseq

#endif
