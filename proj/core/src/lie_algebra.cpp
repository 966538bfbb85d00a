#include "hsseq/lie_algebra.hpp"

#include <sstream>

#include "hsseq/errors.hpp"
#include "hsseq/subspace.hpp"

namespace hsseq {

std::string ValidationReport::summary() const {
  if (ok) return "valid";
  std::ostringstream os;
  os << problems.size() << " violation(s):";
  for (const auto& p : problems) os << "\n  - " << p;
  return os.str();
}

StructureConstants::StructureConstants(std::size_t dim, const Field& f)
    : dim_(dim), field_(f), c_(dim * dim * dim, Scalar::zero(f)) {}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("structure constant index");
  if (v.field() != field_) throw FieldMismatchError("structure constant field");
  c_[(i * dim_ + j) * dim_ + k] = v;
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j,
                                     const std::vector<Scalar>& coeffs) {
  if (coeffs.size() != dim_) throw DimensionError("bracket coefficient count");
  for (std::size_t k = 0; k < dim_; ++k) {
    set(i, j, k, coeffs[k]);
    set(j, i, k, -coeffs[k]);
  }
}

namespace {

std::string label_of(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
}

} // namespace

ValidationReport validate_structure_constants(const StructureConstants& c,
                                              const std::vector<std::string>& labels) {
  ValidationReport rep;
  std::size_t d = c.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (i == j) {
          if (!c.at(i, i, k).is_zero())
            rep.fail("alternating violation: [" + label_of(labels, i) + "," +
                     label_of(labels, i) + "] has nonzero coefficient on " +
                     label_of(labels, k));
        } else if (i < j && c.at(i, j, k) != -c.at(j, i, k)) {
          rep.fail("antisymmetry violation at (" + label_of(labels, i) + "," +
                   label_of(labels, j) + "," + label_of(labels, k) + ")");
        }
      }
  if (!rep.ok) return rep;

  const Field& f = c.field();
  auto bracket_basis = [&](std::size_t i, std::size_t j) {
    std::vector<Scalar> v(d, Scalar::zero(f));
    for (std::size_t k = 0; k < d; ++k) v[k] = c.at(i, j, k);
    return v;
  };
  auto bracket_with_basis = [&](std::size_t i, const std::vector<Scalar>& y) {
    std::vector<Scalar> v(d, Scalar::zero(f));
    for (std::size_t m = 0; m < d; ++m) {
      if (y[m].is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) v[k] += y[m] * c.at(i, m, k);
    }
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::vector<Scalar> sum(d, Scalar::zero(f));
        auto add = [&](const std::vector<Scalar>& v) {
          for (std::size_t m = 0; m < d; ++m) sum[m] += v[m];
        };
        add(bracket_with_basis(i, bracket_basis(j, k)));
        add(bracket_with_basis(j, bracket_basis(k, i)));
        add(bracket_with_basis(k, bracket_basis(i, j)));
        bool zero = true;
        for (const Scalar& v : sum) zero = zero && v.is_zero();
        if (!zero)
          rep.fail("Jacobi violation on (" + label_of(labels, i) + "," +
                   label_of(labels, j) + "," + label_of(labels, k) + ")");
      }
  return rep;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_labels, StructureConstants c)
    : labels_(std::move(basis_labels)), c_(std::move(c)) {
  if (labels_.empty() && c_.dim() > 0)
    for (std::size_t i = 0; i < c_.dim(); ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (labels_.size() != c_.dim()) throw DimensionError("label count != dimension");
  ValidationReport rep = validate_structure_constants(c_, labels_);
  if (!rep.ok) throw ValidationError("not a Lie algebra: " + rep.summary());
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, const Field& f) {
  return LieAlgebra({}, StructureConstants(dim, f));
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) const {
  std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw DimensionError("bracket operand length");
  std::vector<Scalar> r(d, Scalar::zero(field()));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) r[k] += xy * c_.at(i, j, k);
    }
  }
  return r;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim(), dim(), field());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m.set(k, j, c_.at(i, j, k));
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!c_.at(i, j, k).is_zero()) return false;
  return true;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim() || a.field() != b.field()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.constants().at(i, j, k) != b.constants().at(i, j, k)) return false;
  return true;
}

ValidationReport validate_algebra(const LieAlgebra& L) {
  return validate_structure_constants(L.constants(), L.labels());
}

ValidationReport validate_module(const LieAlgebra& algebra, std::size_t dim,
                                 const std::vector<Matrix>& rho) {
  ValidationReport rep;
  if (rho.size() != algebra.dim()) {
    rep.fail("need one action matrix per basis element");
    return rep;
  }
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (rho[i].rows() != dim || rho[i].cols() != dim || rho[i].field() != algebra.field()) {
      rep.fail("action matrix " + std::to_string(i) + " has wrong shape or field");
      return rep;
    }
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      Matrix lhs(dim, dim, algebra.field());
      for (std::size_t k = 0; k < algebra.dim(); ++k) {
        const Scalar& ck = algebra.constants().at(i, j, k);
        if (!ck.is_zero()) lhs = lhs + ck * rho[k];
      }
      if (lhs != commutator(rho[i], rho[j]))
        rep.fail("representation identity fails on pair (" +
                 label_of(algebra.labels(), i) + "," + label_of(algebra.labels(), j) + ")");
    }
  return rep;
}

LieModule::LieModule(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> rho)
    : algebra_(std::move(algebra)), dim_(dim), rho_(std::move(rho)) {
  ValidationReport rep = validate_module(algebra_, dim_, rho_);
  if (!rep.ok) throw ValidationError("not a module: " + rep.summary());
}

LieModule LieModule::trivial(const LieAlgebra& algebra, std::size_t dim) {
  std::vector<Matrix> rho(algebra.dim(), Matrix::zero(dim, dim, algebra.field()));
  return LieModule(algebra, dim, std::move(rho));
}

LieModule LieModule::adjoint(const LieAlgebra& algebra) {
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < algebra.dim(); ++i) rho.push_back(algebra.ad(i));
  return LieModule(algebra, algebra.dim(), std::move(rho));
}

bool LieModule::is_trivial() const {
  for (const Matrix& m : rho_)
    if (!m.is_zero()) return false;
  return true;
}

ValidationReport validate_derivation_action(const LieAlgebra& h, const LieAlgebra& n,
                                            const std::vector<Matrix>& phi) {
  ValidationReport rep;
  if (phi.size() != h.dim()) {
    rep.fail("need one derivation matrix per quotient basis element");
    return rep;
  }
  std::size_t d = n.dim();
  for (std::size_t a = 0; a < phi.size(); ++a) {
    if (phi[a].rows() != d || phi[a].cols() != d || phi[a].field() != n.field()) {
      rep.fail("derivation matrix " + std::to_string(a) + " has wrong shape or field");
      return rep;
    }
  }
  // Derivation rule phi[s,t] = [phi s, t] + [s, phi t] on basis pairs.
  for (std::size_t a = 0; a < phi.size(); ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        std::vector<Scalar> bij(d, Scalar::zero(n.field()));
        for (std::size_t k = 0; k < d; ++k) bij[k] = n.constants().at(i, j, k);
        std::vector<Scalar> lhs = phi[a].apply(bij);
        std::vector<Scalar> ei(d, Scalar::zero(n.field())), ej = ei;
        ei[i] = Scalar::one(n.field());
        ej[j] = Scalar::one(n.field());
        std::vector<Scalar> rhs = n.bracket(phi[a].apply(ei), ej);
        std::vector<Scalar> rhs2 = n.bracket(ei, phi[a].apply(ej));
        bool equal = true;
        for (std::size_t k = 0; k < d; ++k) equal = equal && lhs[k] == rhs[k] + rhs2[k];
        if (!equal)
          rep.fail("phi(" + label_of(h.labels(), a) + ") is not a derivation on pair (" +
                   label_of(n.labels(), i) + "," + label_of(n.labels(), j) + ")");
      }
  // phi must be a homomorphism into Der(n).
  for (std::size_t a = 0; a < phi.size(); ++a)
    for (std::size_t b = a + 1; b < phi.size(); ++b) {
      Matrix expect(d, d, n.field());
      for (std::size_t k = 0; k < h.dim(); ++k) {
        const Scalar& ck = h.constants().at(a, b, k);
        if (!ck.is_zero()) expect = expect + ck * phi[k];
      }
      if (expect != commutator(phi[a], phi[b]))
        rep.fail("phi is not a Lie homomorphism on pair (" + label_of(h.labels(), a) +
                 "," + label_of(h.labels(), b) + ")");
    }
  return rep;
}

DerivationAction::DerivationAction(LieAlgebra h, LieAlgebra n, std::vector<Matrix> phi)
    : h_(std::move(h)), n_(std::move(n)), phi_(std::move(phi)) {
  ValidationReport rep = validate_derivation_action(h_, n_, phi_);
  if (!rep.ok) throw ValidationError("invalid derivation action: " + rep.summary());
}

DerivationAction DerivationAction::zero(const LieAlgebra& h, const LieAlgebra& n) {
  std::vector<Matrix> phi(h.dim(), Matrix::zero(n.dim(), n.dim(), n.field()));
  return DerivationAction(h, n, std::move(phi));
}

LieAlgebra semidirect_sum(const LieAlgebra& n, const LieAlgebra& h,
                          const DerivationAction& phi) {
  if (!(phi.source() == h) || !(phi.target() == n))
    throw DimensionError("derivation action does not match the extension data");
  std::size_t dn = n.dim(), dh = h.dim(), d = dn + dh;
  StructureConstants c(d, n.field());
  // kernel-kernel brackets
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t k = 0; k < dn; ++k) c.set(i, j, k, n.constants().at(i, j, k));
  // quotient-quotient brackets
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = 0; b < dh; ++b)
      for (std::size_t k = 0; k < dh; ++k)
        c.set(dn + a, dn + b, dn + k, h.constants().at(a, b, k));
  // mixed brackets: [(0,a),(t,0)] = (phi(a) t, 0)
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t k = 0; k < dn; ++k) {
        const Scalar& v = phi.phi(a).at(k, j);
        c.set(dn + a, j, k, v);
        c.set(j, dn + a, k, -v);
      }
  std::vector<std::string> labels = n.labels();
  for (const auto& l : h.labels()) labels.push_back(l);
  return LieAlgebra(std::move(labels), std::move(c));
}

std::vector<Matrix> derivation_algebra_basis(const LieAlgebra& n) {
  std::size_t d = n.dim();
  const Field& f = n.field();
  if (d == 0) return {};
  // Unknowns: D[r][s] flattened as r*d+s. Equations per pair i<j, output k:
  //   sum_m c[i][j][m] D[k][m] - sum_m (D[m][i] c[m][j][k] + D[m][j] c[i][m][k]) = 0
  std::size_t pairs = d * (d - 1) / 2;
  Matrix sys(pairs * d, d * d, f);
  std::size_t row = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t m = 0; m < d; ++m) {
          sys.add_to(row, k * d + m, n.constants().at(i, j, m));
          sys.add_to(row, m * d + i, -n.constants().at(m, j, k));
          sys.add_to(row, m * d + j, -n.constants().at(i, m, k));
        }
        ++row;
      }
  Subspace ker = kernel_basis(sys);
  std::vector<Matrix> basis;
  for (std::size_t c = 0; c < ker.dim(); ++c) {
    Matrix D(d, d, f);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) D.set(r, s, ker.basis().at(r * d + s, c));
    basis.push_back(std::move(D));
  }
  return basis;
}

} // namespace hsseq
