#include "hsseq/split_extension.hpp"

#include "hsseq/errors.hpp"

namespace hsseq {

std::string kernel_family_name(const KernelSpec& k) {
  if (std::holds_alternative<FiniteDimKernel>(k)) return "finite";
  if (std::holds_alternative<FreeKernel>(k)) return "free";
  if (std::holds_alternative<DirectSumKernel>(k))
    return std::get<DirectSumKernel>(k).second_is_free ? "free_plus_free"
                                                       : "free_plus_abelian";
  return "free_product";
}

namespace {

Matrix linear_part_matrix(const std::vector<NcPolynomial>& images, std::size_t rank,
                          const Field& f) {
  Matrix L(rank, rank, f);
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<Scalar> lin = images[i].linear_part(rank);
    for (std::size_t j = 0; j < rank; ++j) L.set(j, i, lin[j]);
  }
  return L;
}

/// Checks that gen |-> images defines a Lie homomorphism from h into the
/// derivations of a free Lie algebra: the bracket of two derivations must
/// act as the structure constants dictate, checked on every generator by
/// expanding in the free associative algebra.
void check_free_action_homomorphism(const LieAlgebra& h,
                                    const std::vector<std::vector<NcPolynomial>>& images,
                                    std::size_t rank, const std::string& where,
                                    ValidationReport& rep) {
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b)
      for (std::size_t i = 0; i < rank; ++i) {
        // [D_a, D_b](x_i) = D_a(D_b(x_i)) - D_b(D_a(x_i))
        NcPolynomial lhs = images[b][i].apply_derivation(images[a]) -
                           images[a][i].apply_derivation(images[b]);
        NcPolynomial expect(h.field());
        for (std::size_t k = 0; k < h.dim(); ++k) {
          const Scalar& ck = h.constants().at(a, b, k);
          if (!ck.is_zero()) expect = expect + ck * images[k][i];
        }
        if (!(lhs == expect))
          rep.fail(where + ": action is not a Lie homomorphism on quotient pair (" +
                   std::to_string(a) + "," + std::to_string(b) + "), generator " +
                   std::to_string(i));
      }
}

void check_matrix_action_homomorphism(const LieAlgebra& h, const std::vector<Matrix>& mats,
                                      const std::string& where, ValidationReport& rep) {
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b) {
      Matrix expect(mats[a].rows(), mats[a].cols(), h.field());
      for (std::size_t k = 0; k < h.dim(); ++k) {
        const Scalar& ck = h.constants().at(a, b, k);
        if (!ck.is_zero()) expect = expect + ck * mats[k];
      }
      if (expect != commutator(mats[a], mats[b]))
        rep.fail(where + ": action is not a Lie homomorphism on quotient pair (" +
                 std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

bool images_well_formed(const std::vector<NcPolynomial>& images, std::size_t rank,
                        const std::string& where, ValidationReport& rep) {
  if (images.size() != rank) {
    rep.fail(where + ": expected " + std::to_string(rank) + " generator images, got " +
             std::to_string(images.size()));
    return false;
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    if (!images[i].constant_term().is_zero()) {
      rep.fail(where + ": image of generator " + std::to_string(i) +
               " has a constant term");
      return false;
    }
  return true;
}

} // namespace

ValidationReport validate_extension(const KernelSpec& kernel, const LieAlgebra& h,
                                    const KernelAction& action,
                                    const CoefficientData& m) {
  ValidationReport rep;
  const Field& f = h.field();
  std::size_t dh = h.dim();
  std::size_t dm = m.dim;

  // quotient action on coefficients must be a representation of h
  if (m.quotient_action.size() != dh) {
    rep.fail("coefficients: expected " + std::to_string(dh) +
             " quotient action matrices, got " + std::to_string(m.quotient_action.size()));
    return rep;
  }
  {
    ValidationReport sub = validate_module(h, dm, m.quotient_action);
    for (const auto& p : sub.problems) rep.fail("coefficients (quotient side): " + p);
  }

  bool kernel_trivial = true;
  for (const Matrix& mat : m.kernel_action) kernel_trivial = kernel_trivial && mat.is_zero();

  if (const auto* fd = std::get_if<FiniteDimKernel>(&kernel)) {
    const LieAlgebra& n = fd->algebra;
    if (n.field() != f) {
      rep.fail("kernel and quotient live over different fields");
      return rep;
    }
    const auto* act = std::get_if<FiniteDimAction>(&action);
    if (!act || act->phi.size() != dh) {
      rep.fail("finite kernel: need one derivation matrix per quotient basis element");
      return rep;
    }
    ValidationReport der = validate_derivation_action(h, n, act->phi);
    for (const auto& p : der.problems) rep.fail(p);

    if (m.kernel_action.size() != n.dim()) {
      rep.fail("coefficients: expected " + std::to_string(n.dim()) +
               " kernel action matrices, got " + std::to_string(m.kernel_action.size()));
      return rep;
    }
    ValidationReport mod = validate_module(n, dm, m.kernel_action);
    for (const auto& p : mod.problems) rep.fail("coefficients (kernel side): " + p);
    // mixed identity: [rho(alpha), rho(s)] = rho(phi(alpha) s)
    if (rep.ok)
      for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t i = 0; i < n.dim(); ++i) {
          Matrix expect(dm, dm, f);
          for (std::size_t k = 0; k < n.dim(); ++k) {
            const Scalar& pk = act->phi[a].at(k, i);
            if (!pk.is_zero()) expect = expect + pk * m.kernel_action[k];
          }
          if (commutator(m.quotient_action[a], m.kernel_action[i]) != expect)
            rep.fail("coefficients: mixed module identity fails for quotient " +
                     std::to_string(a) + ", kernel " + std::to_string(i));
        }
    return rep;
  }

  if (const auto* fk = std::get_if<FreeKernel>(&kernel)) {
    std::size_t rank = fk->rank();
    const auto* act = std::get_if<FreeAction>(&action);
    if (!act || act->images.size() != dh) {
      rep.fail("free kernel: need one image list per quotient basis element");
      return rep;
    }
    for (std::size_t a = 0; a < dh; ++a)
      if (!images_well_formed(act->images[a], rank, "free kernel", rep)) return rep;
    check_free_action_homomorphism(h, act->images, rank, "free kernel", rep);

    if (!m.kernel_action.empty() && m.kernel_action.size() != rank) {
      rep.fail("coefficients: expected " + std::to_string(rank) +
               " kernel action matrices (one per generator)");
      return rep;
    }
    // Any generator matrices define a module over a free Lie algebra;
    // only the mixed identity constrains them.
    if (rep.ok && !m.kernel_action.empty())
      for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t i = 0; i < rank; ++i) {
          Matrix expect = act->images[a][i].evaluate(m.kernel_action, dm);
          if (commutator(m.quotient_action[a], m.kernel_action[i]) != expect)
            rep.fail("coefficients: mixed module identity fails for quotient " +
                     std::to_string(a) + ", generator " + std::to_string(i));
        }
    return rep;
  }

  if (const auto* ds = std::get_if<DirectSumKernel>(&kernel)) {
    const auto* act = std::get_if<DirectSumAction>(&action);
    if (!act || act->gens.size() != dh) {
      rep.fail("direct sum kernel: need one action per quotient basis element");
      return rep;
    }
    if (!kernel_trivial) {
      rep.fail("direct sum kernel: coefficients with nontrivial kernel action are unsupported");
      return rep;
    }
    std::size_t rank = ds->free_rank(), second = ds->second_size();
    std::vector<std::vector<NcPolynomial>> first_images, second_images;
    std::vector<Matrix> second_mats, cross_mats;
    for (std::size_t a = 0; a < dh; ++a) {
      const auto& g = act->gens[a];
      if (!images_well_formed(g.on_free, rank, "direct sum kernel (free summand)", rep))
        return rep;
      first_images.push_back(g.on_free);
      if (ds->second_is_free) {
        const auto* imgs = std::get_if<std::vector<NcPolynomial>>(&g.on_second);
        if (!imgs ||
            !images_well_formed(*imgs, second, "direct sum kernel (second summand)", rep)) {
          if (!imgs) rep.fail("direct sum kernel: second summand action must be generator images");
          return rep;
        }
        if (g.cross.has_value()) {
          rep.fail("direct sum kernel: cross action requires an abelian second summand");
          return rep;
        }
        second_images.push_back(*imgs);
      } else {
        const auto* mat = std::get_if<Matrix>(&g.on_second);
        if (!mat || mat->rows() != second || mat->cols() != second) {
          rep.fail("direct sum kernel: second summand action must be a " +
                   std::to_string(second) + "x" + std::to_string(second) + " matrix");
          return rep;
        }
        second_mats.push_back(*mat);
        Matrix cross = g.cross.value_or(Matrix::zero(second, rank, f));
        if (cross.rows() != second || cross.cols() != rank) {
          rep.fail("direct sum kernel: cross action must be " + std::to_string(second) +
                   "x" + std::to_string(rank));
          return rep;
        }
        cross_mats.push_back(cross);
      }
    }
    check_free_action_homomorphism(h, first_images, rank, "direct sum kernel (free summand)",
                                   rep);
    if (ds->second_is_free) {
      check_free_action_homomorphism(h, second_images, second,
                                     "direct sum kernel (second summand)", rep);
    } else {
      check_matrix_action_homomorphism(h, second_mats, "direct sum kernel (second summand)",
                                       rep);
      // cross maps: bracket in Der(free (+) abelian) has cross block
      //   Dc_a L_b + Dk_a Dc_b - Dc_b L_a - Dk_b Dc_a
      // where L is the linear part of the free-summand derivation.
      std::vector<Matrix> lin;
      for (std::size_t a = 0; a < dh; ++a)
        lin.push_back(linear_part_matrix(first_images[a], rank, f));
      for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t b = a + 1; b < dh; ++b) {
          Matrix expect(second, rank, f);
          for (std::size_t k = 0; k < dh; ++k) {
            const Scalar& ck = h.constants().at(a, b, k);
            if (!ck.is_zero()) expect = expect + ck * cross_mats[k];
          }
          Matrix got = cross_mats[a] * lin[b] + second_mats[a] * cross_mats[b] -
                       cross_mats[b] * lin[a] - second_mats[b] * cross_mats[a];
          if (expect != got)
            rep.fail("direct sum kernel: cross maps break the Lie homomorphism on pair (" +
                     std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    return rep;
  }

  const auto& fp = std::get<FreeProductKernel>(kernel);
  const auto* act = std::get_if<FreeProductAction>(&action);
  if (!act || act->gens.size() != dh) {
    rep.fail("free product kernel: need one action per quotient basis element");
    return rep;
  }
  if (!kernel_trivial) {
    rep.fail("free product kernel: coefficients with nontrivial kernel action are unsupported");
    return rep;
  }
  for (std::size_t a = 0; a < dh; ++a)
    if (act->gens[a].size() != fp.factors.size()) {
      rep.fail("free product kernel: need one action per factor");
      return rep;
    }
  for (std::size_t fi = 0; fi < fp.factors.size(); ++fi) {
    const auto& factor = fp.factors[fi];
    std::string where = "free product factor " + std::to_string(fi + 1);
    if (factor.is_free) {
      std::vector<std::vector<NcPolynomial>> images;
      for (std::size_t a = 0; a < dh; ++a) {
        const auto* imgs = std::get_if<std::vector<NcPolynomial>>(&act->gens[a][fi]);
        if (!imgs || !images_well_formed(*imgs, factor.size(), where, rep)) {
          if (!imgs) rep.fail(where + ": expected generator images");
          return rep;
        }
        images.push_back(*imgs);
      }
      check_free_action_homomorphism(h, images, factor.size(), where, rep);
    } else {
      std::vector<Matrix> mats;
      for (std::size_t a = 0; a < dh; ++a) {
        const auto* mat = std::get_if<Matrix>(&act->gens[a][fi]);
        if (!mat || mat->rows() != factor.size() || mat->cols() != factor.size()) {
          rep.fail(where + ": expected a " + std::to_string(factor.size()) + "x" +
                   std::to_string(factor.size()) + " matrix");
          return rep;
        }
        mats.push_back(*mat);
      }
      check_matrix_action_homomorphism(h, mats, where, rep);
    }
  }
  return rep;
}

SplitExtension::SplitExtension(KernelSpec kernel, LieAlgebra quotient, KernelAction action,
                               CoefficientData coefficients)
    : kernel_(std::move(kernel)),
      h_(std::move(quotient)),
      action_(std::move(action)),
      m_(std::move(coefficients)) {
  ValidationReport rep = validate_extension(kernel_, h_, action_, m_);
  if (!rep.ok) throw ValidationError("invalid extension: " + rep.summary());
}

bool SplitExtension::kernel_acts_trivially() const {
  for (const Matrix& mat : m_.kernel_action)
    if (!mat.is_zero()) return false;
  return true;
}

std::optional<std::size_t> SplitExtension::kernel_dim() const {
  if (kernel_is_finite_dim()) return finite_kernel().dim();
  return std::nullopt;
}

LieAlgebra total_algebra(const SplitExtension& ext) {
  if (!ext.kernel_is_finite_dim())
    throw UnsupportedError("total algebra requires a finite-dimensional kernel");
  const LieAlgebra& n = ext.finite_kernel();
  DerivationAction phi(ext.quotient(), n, std::get<FiniteDimAction>(ext.action()).phi);
  return semidirect_sum(n, ext.quotient(), phi);
}

LieModule total_module(const SplitExtension& ext) {
  LieAlgebra g = total_algebra(ext);
  const LieAlgebra& n = ext.finite_kernel();
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < n.dim(); ++i) rho.push_back(ext.coefficients().kernel_action[i]);
  for (std::size_t a = 0; a < ext.quotient().dim(); ++a)
    rho.push_back(ext.coefficients().quotient_action[a]);
  return LieModule(std::move(g), ext.coefficients().dim, std::move(rho));
}

LieModule kernel_module(const SplitExtension& ext) {
  if (!ext.kernel_is_finite_dim())
    throw UnsupportedError("kernel module requires a finite-dimensional kernel");
  return LieModule(ext.finite_kernel(), ext.coefficients().dim,
                   ext.coefficients().kernel_action);
}

LieModule quotient_module(const SplitExtension& ext) {
  return LieModule(ext.quotient(), ext.coefficients().dim,
                   ext.coefficients().quotient_action);
}

} // namespace hsseq
