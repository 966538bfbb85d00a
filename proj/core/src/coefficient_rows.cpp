#include "hsseq/coefficient_rows.hpp"

#include "hsseq/errors.hpp"

namespace hsseq {

namespace {

std::vector<Matrix> trivial_or(const std::vector<Matrix>& action, std::size_t count,
                               std::size_t dm, const Field& f) {
  if (!action.empty()) return action;
  return std::vector<Matrix>(count, Matrix::zero(dm, dm, f));
}

Matrix linear_part_matrix(const std::vector<NcPolynomial>& images, std::size_t rank,
                          const Field& f) {
  Matrix L(rank, rank, f);
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<Scalar> lin = images[i].linear_part(rank);
    for (std::size_t j = 0; j < rank; ++j) L.set(j, i, lin[j]);
  }
  return L;
}

void add_scaled_identity_block(Matrix& act, std::size_t row0, std::size_t col0,
                               const Scalar& c, std::size_t dm) {
  for (std::size_t v = 0; v < dm; ++v) act.add_to(row0 + v, col0 + v, c);
}

void add_matrix_block(Matrix& act, std::size_t row0, std::size_t col0, const Matrix& m) {
  for (std::size_t v = 0; v < m.rows(); ++v)
    for (std::size_t u = 0; u < m.cols(); ++u)
      if (!m.at(v, u).is_zero()) act.add_to(row0 + v, col0 + u, m.at(v, u));
}

} // namespace

CoefficientRows rows_finite_dim(const SplitExtension& ext) {
  if (!ext.kernel_is_finite_dim())
    throw UnsupportedError("rows_finite_dim needs a finite-dimensional kernel");
  const LieAlgebra& n = ext.finite_kernel();
  LieModule M = kernel_module(ext);
  const auto& phi = std::get<FiniteDimAction>(ext.action()).phi;
  CoefficientRows rows;
  rows.field = ext.field();
  rows.max_q = n.dim();
  for (std::size_t q = 0; q <= rows.max_q; ++q) {
    rows.dims.push_back(binomial(n.dim(), q) * M.dim());
    rows.descriptions.push_back("Hom(L^" + std::to_string(q) + " n, M)");
    rows.d_vert.push_back(ce_cochain_differential(M, q));
    rows.h_action.push_back(
        restrict_action_to_cochains(M, phi, ext.coefficients().quotient_action, q));
  }
  return rows;
}

CoefficientRows rows_free_kernel(const SplitExtension& ext) {
  const auto* fk = std::get_if<FreeKernel>(&ext.kernel());
  if (!fk) throw UnsupportedError("rows_free_kernel needs a free kernel");
  const auto& act = std::get<FreeAction>(ext.action());
  const Field& f = ext.field();
  std::size_t m = fk->rank(), dm = ext.coefficients().dim;
  std::size_t dh = ext.quotient().dim();
  std::vector<Matrix> rho = trivial_or(ext.coefficients().kernel_action, m, dm, f);

  CoefficientRows rows;
  rows.field = f;
  rows.max_q = 1;
  rows.dims = {dm, m * dm};
  rows.descriptions = {"M", "Hom(J, M)"};

  // d0 : M -> M^m, v |-> (rho(x_1) v, ..., rho(x_m) v)
  Matrix d0(m * dm, dm, f);
  for (std::size_t i = 0; i < m; ++i) d0.set_block(i * dm, 0, rho[i]);
  rows.d_vert = {std::move(d0), Matrix(0, m * dm, f)};

  std::vector<Matrix> act0, act1;
  for (std::size_t a = 0; a < dh; ++a) {
    act0.push_back(ext.coefficients().quotient_action[a]);
    // (alpha f)(x_i) = rho_M(alpha) f(x_i) - sum_j rho(u_j) f(x_j),
    // where the image of x_i is sum_j u_j x_j in left normal form.
    Matrix h1(m * dm, m * dm, f);
    for (std::size_t i = 0; i < m; ++i) {
      add_matrix_block(h1, i * dm, i * dm, ext.coefficients().quotient_action[a]);
      std::vector<NcPolynomial> parts = act.images[a][i].left_normal_form(m);
      for (std::size_t j = 0; j < m; ++j) {
        if (parts[j].is_zero()) continue;
        Matrix coeff = parts[j].evaluate(rho, dm);
        add_matrix_block(h1, i * dm, j * dm, -coeff);
      }
    }
    act1.push_back(std::move(h1));
  }
  rows.h_action = {std::move(act0), std::move(act1)};
  return rows;
}

namespace {

/// Rows for the free (+) abelian kernel. Degree q has the wedge part
/// Hom(Lambda^q of the abelian summand, M) followed by the generator part
/// Hom(Lambda^{q-1} (x) <generators>, M); the kernel action on M is
/// trivial, so all vertical differentials vanish and only linear parts,
/// wedge derivations and the cross maps act.
CoefficientRows rows_free_plus_abelian(const SplitExtension& ext,
                                       const DirectSumKernel& ds) {
  const auto& act = std::get<DirectSumAction>(ext.action());
  const Field& f = ext.field();
  std::size_t m = ds.free_rank(), n = ds.second_size(), dm = ext.coefficients().dim;
  std::size_t dh = ext.quotient().dim();

  CoefficientRows rows;
  rows.field = f;
  rows.max_q = (m > 0) ? n + 1 : n;

  std::vector<ExteriorBasis> wedge;  // Lambda^q of the abelian summand, q = 0..n
  for (std::size_t q = 0; q <= n; ++q) wedge.emplace_back(n, q);

  auto wedge_count = [&](std::size_t q) { return q <= n ? wedge[q].count() : 0; };
  auto gen_count = [&](std::size_t q) {
    return (q >= 1 && q - 1 <= n) ? wedge[q - 1].count() * m : 0;
  };

  for (std::size_t q = 0; q <= rows.max_q; ++q) {
    rows.dims.push_back((wedge_count(q) + gen_count(q)) * dm);
    rows.descriptions.push_back("Hom(A_" + std::to_string(q) + ", M)");
  }
  for (std::size_t q = 0; q <= rows.max_q; ++q)
    rows.d_vert.push_back(Matrix(rows.dim(q + 1), rows.dim(q), f));

  for (std::size_t q = 0; q <= rows.max_q; ++q) {
    std::size_t wc = wedge_count(q), gc = gen_count(q);
    std::size_t dim_q = (wc + gc) * dm;
    std::size_t gen_offset = wc * dm;
    std::vector<Matrix> per_gen;
    for (std::size_t a = 0; a < dh; ++a) {
      const Matrix& rho_h = ext.coefficients().quotient_action[a];
      Matrix abelian_part = std::get<Matrix>(act.gens[a].on_second);
      Matrix cross = act.gens[a].cross.value_or(Matrix::zero(n, m, f));
      Matrix lin = linear_part_matrix(act.gens[a].on_free, m, f);

      Matrix h(dim_q, dim_q, f);
      // pure wedge component
      for (std::size_t t = 0; t < wc; ++t) {
        const auto& T = wedge[q].monomial(t);
        add_matrix_block(h, t * dm, t * dm, rho_h);
        for (std::size_t slot = 0; slot < q; ++slot)
          for (std::size_t i = 0; i < n; ++i) {
            const Scalar& c = abelian_part.at(i, T[slot]);
            if (c.is_zero()) continue;
            std::vector<std::uint32_t> tuple = T;
            tuple[slot] = static_cast<std::uint32_t>(i);
            auto sorted = wedge[q].sort_tuple(tuple);
            if (sorted.zero) continue;
            Scalar coeff = -c;
            if (sorted.sign < 0) coeff = -coeff;
            add_scaled_identity_block(h, t * dm, sorted.index * dm, coeff, dm);
          }
      }
      // generator component
      if (q >= 1 && q - 1 <= n) {
        const ExteriorBasis& vb = wedge[q - 1];
        for (std::size_t t = 0; t < vb.count(); ++t) {
          const auto& V = vb.monomial(t);
          for (std::size_t k = 0; k < m; ++k) {
            std::size_t row0 = gen_offset + (t * m + k) * dm;
            add_matrix_block(h, row0, row0, rho_h);
            // free summand, linear part
            for (std::size_t j = 0; j < m; ++j) {
              const Scalar& c = lin.at(j, k);
              if (!c.is_zero())
                add_scaled_identity_block(h, row0, gen_offset + (t * m + j) * dm, -c, dm);
            }
            // abelian summand acting on the wedge factor
            for (std::size_t slot = 0; slot + 1 < q; ++slot)
              for (std::size_t i = 0; i < n; ++i) {
                const Scalar& c = abelian_part.at(i, V[slot]);
                if (c.is_zero()) continue;
                std::vector<std::uint32_t> tuple = V;
                tuple[slot] = static_cast<std::uint32_t>(i);
                auto sorted = vb.sort_tuple(tuple);
                if (sorted.zero) continue;
                Scalar coeff = -c;
                if (sorted.sign < 0) coeff = -coeff;
                add_scaled_identity_block(h, row0, gen_offset + (sorted.index * m + k) * dm,
                                          coeff, dm);
              }
            // cross map into the wedge component, sign (-1)^{q-1}
            if (q <= n)
              for (std::size_t i = 0; i < n; ++i) {
                const Scalar& c = cross.at(i, k);
                if (c.is_zero()) continue;
                std::vector<std::uint32_t> tuple = V;
                tuple.push_back(static_cast<std::uint32_t>(i));
                auto sorted = wedge[q].sort_tuple(tuple);
                if (sorted.zero) continue;
                Scalar coeff = -c;
                if ((q - 1) % 2 == 1) coeff = -coeff;
                if (sorted.sign < 0) coeff = -coeff;
                add_scaled_identity_block(h, row0, sorted.index * dm, coeff, dm);
              }
          }
        }
      }
      per_gen.push_back(std::move(h));
    }
    rows.h_action.push_back(std::move(per_gen));
  }
  return rows;
}

/// Rows for the free (+) free kernel: the tensor square of the two-term
/// free resolutions, so degrees 0, 1, 2 with dimensions dm, (m1+m2) dm,
/// m1 m2 dm. Trivial kernel action kills every differential; only linear
/// parts act.
CoefficientRows rows_free_plus_free(const SplitExtension& ext, const DirectSumKernel& ds) {
  const auto& act = std::get<DirectSumAction>(ext.action());
  const Field& f = ext.field();
  std::size_t m1 = ds.free_rank(), m2 = ds.second_size(), dm = ext.coefficients().dim;
  std::size_t dh = ext.quotient().dim();

  CoefficientRows rows;
  rows.field = f;
  rows.max_q = (m1 > 0 && m2 > 0) ? 2 : ((m1 + m2) > 0 ? 1 : 0);
  rows.dims = {dm};
  rows.descriptions = {"M"};
  if (rows.max_q >= 1) {
    rows.dims.push_back((m1 + m2) * dm);
    rows.descriptions.push_back("Hom(J_1 (+) J_2, M)");
  }
  if (rows.max_q >= 2) {
    rows.dims.push_back(m1 * m2 * dm);
    rows.descriptions.push_back("Hom(J_1 (x) J_2, M)");
  }
  for (std::size_t q = 0; q <= rows.max_q; ++q)
    rows.d_vert.push_back(Matrix(rows.dim(q + 1), rows.dim(q), f));

  for (std::size_t q = 0; q <= rows.max_q; ++q) rows.h_action.emplace_back();
  for (std::size_t a = 0; a < dh; ++a) {
    const Matrix& rho_h = ext.coefficients().quotient_action[a];
    Matrix l1 = linear_part_matrix(act.gens[a].on_free, m1, f);
    Matrix l2 = linear_part_matrix(std::get<std::vector<NcPolynomial>>(act.gens[a].on_second),
                                   m2, f);
    rows.h_action[0].push_back(rho_h);
    if (rows.max_q >= 1) {
      Matrix h1((m1 + m2) * dm, (m1 + m2) * dm, f);
      for (std::size_t i = 0; i < m1; ++i) {
        add_matrix_block(h1, i * dm, i * dm, rho_h);
        for (std::size_t j = 0; j < m1; ++j)
          if (!l1.at(j, i).is_zero())
            add_scaled_identity_block(h1, i * dm, j * dm, -l1.at(j, i), dm);
      }
      for (std::size_t i = 0; i < m2; ++i) {
        std::size_t row0 = (m1 + i) * dm;
        add_matrix_block(h1, row0, row0, rho_h);
        for (std::size_t j = 0; j < m2; ++j)
          if (!l2.at(j, i).is_zero())
            add_scaled_identity_block(h1, row0, (m1 + j) * dm, -l2.at(j, i), dm);
      }
      rows.h_action[1].push_back(std::move(h1));
    }
    if (rows.max_q >= 2) {
      Matrix h2(m1 * m2 * dm, m1 * m2 * dm, f);
      for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m2; ++j) {
          std::size_t row0 = (i * m2 + j) * dm;
          add_matrix_block(h2, row0, row0, rho_h);
          for (std::size_t k = 0; k < m1; ++k)
            if (!l1.at(k, i).is_zero())
              add_scaled_identity_block(h2, row0, (k * m2 + j) * dm, -l1.at(k, i), dm);
          for (std::size_t k = 0; k < m2; ++k)
            if (!l2.at(k, j).is_zero())
              add_scaled_identity_block(h2, row0, (i * m2 + k) * dm, -l2.at(k, j), dm);
        }
      rows.h_action[2].push_back(std::move(h2));
    }
  }
  return rows;
}

} // namespace

CoefficientRows rows_direct_sum(const SplitExtension& ext) {
  const auto* ds = std::get_if<DirectSumKernel>(&ext.kernel());
  if (!ds) throw UnsupportedError("rows_direct_sum needs a direct sum kernel");
  return ds->second_is_free ? rows_free_plus_free(ext, *ds)
                            : rows_free_plus_abelian(ext, *ds);
}

CoefficientRows rows_free_product(const SplitExtension& ext) {
  const auto* fp = std::get_if<FreeProductKernel>(&ext.kernel());
  if (!fp) throw UnsupportedError("rows_free_product needs a free product kernel");
  const auto& act = std::get<FreeProductAction>(ext.action());
  const Field& f = ext.field();
  std::size_t dm = ext.coefficients().dim;
  std::size_t dh = ext.quotient().dim();

  CoefficientRows rows;
  rows.field = f;
  rows.max_q = 0;
  for (const auto& factor : fp->factors) {
    if (factor.is_free && factor.size() > 0) rows.max_q = std::max<std::size_t>(rows.max_q, 1);
    if (!factor.is_free) rows.max_q = std::max(rows.max_q, factor.size());
  }

  // per factor and degree: number of basis monomials contributed
  auto factor_count = [&](const FreeProductKernel::Factor& factor, std::size_t q) {
    if (q == 0) return std::size_t{0};
    if (factor.is_free) return q == 1 ? factor.size() : 0;
    return q <= factor.size() ? binomial(factor.size(), q) : 0;
  };

  for (std::size_t q = 0; q <= rows.max_q; ++q) {
    std::size_t count = (q == 0) ? 1 : 0;
    for (const auto& factor : fp->factors) count += factor_count(factor, q);
    rows.dims.push_back(count * dm);
    rows.descriptions.push_back(q == 0 ? "M" : "(+)_i Hom(L^" + std::to_string(q) +
                                                   " n_i, M)");
  }
  for (std::size_t q = 0; q <= rows.max_q; ++q)
    rows.d_vert.push_back(Matrix(rows.dim(q + 1), rows.dim(q), f));

  for (std::size_t q = 0; q <= rows.max_q; ++q) rows.h_action.emplace_back();
  for (std::size_t a = 0; a < dh; ++a) {
    const Matrix& rho_h = ext.coefficients().quotient_action[a];
    rows.h_action[0].push_back(rho_h);
    for (std::size_t q = 1; q <= rows.max_q; ++q) {
      Matrix h(rows.dim(q), rows.dim(q), f);
      std::size_t offset = 0;
      for (std::size_t fi = 0; fi < fp->factors.size(); ++fi) {
        const auto& factor = fp->factors[fi];
        std::size_t count = factor_count(factor, q);
        if (count == 0) continue;
        if (factor.is_free) {
          Matrix lin = linear_part_matrix(
              std::get<std::vector<NcPolynomial>>(act.gens[a][fi]), factor.size(), f);
          for (std::size_t i = 0; i < factor.size(); ++i) {
            std::size_t row0 = offset + i * dm;
            add_matrix_block(h, row0, row0, rho_h);
            for (std::size_t j = 0; j < factor.size(); ++j)
              if (!lin.at(j, i).is_zero())
                add_scaled_identity_block(h, row0, offset + j * dm, -lin.at(j, i), dm);
          }
        } else {
          const Matrix& dk = std::get<Matrix>(act.gens[a][fi]);
          ExteriorBasis basis(factor.size(), q);
          for (std::size_t t = 0; t < basis.count(); ++t) {
            const auto& T = basis.monomial(t);
            std::size_t row0 = offset + t * dm;
            add_matrix_block(h, row0, row0, rho_h);
            for (std::size_t slot = 0; slot < q; ++slot)
              for (std::size_t i = 0; i < factor.size(); ++i) {
                const Scalar& c = dk.at(i, T[slot]);
                if (c.is_zero()) continue;
                std::vector<std::uint32_t> tuple = T;
                tuple[slot] = static_cast<std::uint32_t>(i);
                auto sorted = basis.sort_tuple(tuple);
                if (sorted.zero) continue;
                Scalar coeff = -c;
                if (sorted.sign < 0) coeff = -coeff;
                add_scaled_identity_block(h, row0, offset + sorted.index * dm, coeff, dm);
              }
          }
        }
        offset += count * dm;
      }
      rows.h_action[q].push_back(std::move(h));
    }
  }
  return rows;
}

CoefficientRows coefficient_rows(const SplitExtension& ext) {
  if (std::holds_alternative<FiniteDimKernel>(ext.kernel())) return rows_finite_dim(ext);
  if (std::holds_alternative<FreeKernel>(ext.kernel())) return rows_free_kernel(ext);
  if (std::holds_alternative<DirectSumKernel>(ext.kernel())) return rows_direct_sum(ext);
  return rows_free_product(ext);
}

void check_rows_invariants(const CoefficientRows& rows, const LieAlgebra& h) {
  for (std::size_t q = 0; q + 1 <= rows.max_q; ++q) {
    if (!(rows.d_vert[q + 1] * rows.d_vert[q]).is_zero())
      throw InternalInvariantError("row differential does not square to zero at degree " +
                                   std::to_string(q));
  }
  for (std::size_t q = 0; q < rows.h_action.size(); ++q)
    for (std::size_t a = 0; a < rows.h_action[q].size(); ++a) {
      if (q + 1 <= rows.max_q) {
        if (rows.h_action[q + 1][a] * rows.d_vert[q] != rows.d_vert[q] * rows.h_action[q][a])
          throw InternalInvariantError("quotient action is not equivariant at degree " +
                                       std::to_string(q) + ", generator " +
                                       std::to_string(a));
      }
    }
  for (std::size_t q = 0; q <= rows.max_q; ++q) {
    ValidationReport rep = validate_module(h, rows.dims[q], rows.h_action[q]);
    if (!rep.ok)
      throw InternalInvariantError("row action is not a representation at degree " +
                                   std::to_string(q) + ": " + rep.summary());
  }
}

std::vector<LieModule> row_cohomology_modules(const CoefficientRows& rows,
                                              const LieAlgebra& h) {
  std::vector<LieModule> out;
  for (std::size_t q = 0; q <= rows.max_q; ++q) {
    Subspace cocycles = kernel_basis(rows.d_vert[q]);
    Subspace coboundaries = (q == 0) ? Subspace::zero(rows.dims[0], rows.field)
                                     : image_basis(rows.d_vert[q - 1]);
    std::vector<Matrix> induced;
    for (std::size_t a = 0; a < h.dim(); ++a) {
      try {
        induced.push_back(induced_map_on_quotients(rows.h_action[q][a], cocycles,
                                                   coboundaries, cocycles, coboundaries));
      } catch (const QuotientPreconditionError& e) {
        throw InternalInvariantError(
            std::string("row action does not descend to cohomology: ") + e.what());
      }
    }
    out.emplace_back(h, cocycles.dim() - coboundaries.dim(), std::move(induced));
  }
  return out;
}

} // namespace hsseq
