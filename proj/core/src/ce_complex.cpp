#include "hsseq/ce_complex.hpp"

#include "hsseq/errors.hpp"

namespace hsseq {

Matrix ce_cochain_differential(const LieModule& M, std::size_t q) {
  const LieAlgebra& L = M.algebra();
  std::size_t n = L.dim(), dm = M.dim();
  ExteriorBasis src(n, q);
  if (q + 1 > n) return Matrix(0, src.count() * dm, L.field());
  ExteriorBasis dst(n, q + 1);
  Matrix d(dst.count() * dm, src.count() * dm, L.field());

  for (std::size_t t = 0; t < dst.count(); ++t) {
    const auto& T = dst.monomial(t);
    // action terms: (-1)^i x_i . f(T minus slot i)
    for (std::size_t i = 0; i <= q; ++i) {
      std::vector<std::uint32_t> rest;
      rest.reserve(q);
      for (std::size_t r = 0; r <= q; ++r)
        if (r != i) rest.push_back(T[r]);
      std::size_t s = src.index_of(rest);
      const Matrix& rho = M.rho(T[i]);
      Scalar sign = (i % 2 == 0) ? Scalar::one(L.field()) : -Scalar::one(L.field());
      for (std::size_t v = 0; v < dm; ++v)
        for (std::size_t u = 0; u < dm; ++u) {
          const Scalar& r = rho.at(v, u);
          if (!r.is_zero()) d.add_to(t * dm + v, s * dm + u, sign * r);
        }
    }
    // bracket terms: (-1)^{i+j} f([x_i, x_j] ^ rest)
    for (std::size_t i = 0; i <= q; ++i)
      for (std::size_t j = i + 1; j <= q; ++j) {
        std::vector<std::uint32_t> rest;
        rest.reserve(q);
        for (std::size_t r = 0; r <= q; ++r)
          if (r != i && r != j) rest.push_back(T[r]);
        Scalar sign = ((i + j) % 2 == 0) ? Scalar::one(L.field()) : -Scalar::one(L.field());
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& ck = L.constants().at(T[i], T[j], k);
          if (ck.is_zero()) continue;
          std::vector<std::uint32_t> tuple;
          tuple.reserve(q);
          tuple.push_back(static_cast<std::uint32_t>(k));
          for (auto r : rest) tuple.push_back(r);
          ExteriorBasis::Sorted sorted = src.sort_tuple(tuple);
          if (sorted.zero) continue;
          Scalar coeff = sign * ck;
          if (sorted.sign < 0) coeff = -coeff;
          for (std::size_t v = 0; v < dm; ++v)
            d.add_to(t * dm + v, sorted.index * dm + v, coeff);
        }
      }
  }
  return d;
}

CochainComplex ce_cochain_complex(const LieModule& M) {
  std::size_t n = M.algebra().dim();
  CochainComplex cx;
  for (std::size_t q = 0; q <= n; ++q) {
    cx.space_dims.push_back(binomial(n, q) * M.dim());
    cx.differentials.push_back(ce_cochain_differential(M, q));
  }
  return cx;
}

std::vector<CohomologyDegree> cohomology(const LieModule& M) {
  CochainComplex cx = ce_cochain_complex(M);
  std::size_t n = M.algebra().dim();
  std::vector<CohomologyDegree> out(n + 1);
  for (std::size_t q = 0; q <= n; ++q) {
    out[q].cocycles = kernel_basis(cx.differentials[q]);
    out[q].coboundaries = (q == 0) ? Subspace::zero(cx.space_dims[0], M.field())
                                   : image_basis(cx.differentials[q - 1]);
    out[q].betti = out[q].cocycles.dim() - out[q].coboundaries.dim();
  }
  return out;
}

std::vector<std::size_t> betti_numbers(const LieModule& M) {
  std::vector<std::size_t> b;
  for (const auto& deg : cohomology(M)) b.push_back(deg.betti);
  return b;
}

std::vector<Matrix> restrict_action_to_cochains(const LieModule& M,
                                                const std::vector<Matrix>& phi,
                                                const std::vector<Matrix>& rho_out,
                                                std::size_t q) {
  const LieAlgebra& L = M.algebra();
  std::size_t n = L.dim(), dm = M.dim();
  if (phi.size() != rho_out.size())
    throw DimensionError("one derivation and one module matrix per outer generator");
  ExteriorBasis basis(n, q);
  std::size_t dim_c = basis.count() * dm;
  std::vector<Matrix> out;
  out.reserve(phi.size());
  for (std::size_t a = 0; a < phi.size(); ++a) {
    Matrix act(dim_c, dim_c, L.field());
    for (std::size_t t = 0; t < basis.count(); ++t) {
      const auto& T = basis.monomial(t);
      // (alpha f)(e_T) = rho_out f(e_T) - f(alpha . e_T)
      for (std::size_t v = 0; v < dm; ++v)
        for (std::size_t u = 0; u < dm; ++u) {
          const Scalar& r = rho_out[a].at(v, u);
          if (!r.is_zero()) act.add_to(t * dm + v, t * dm + u, r);
        }
      for (std::size_t slot = 0; slot < q; ++slot)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& pk = phi[a].at(k, T[slot]);
          if (pk.is_zero()) continue;
          std::vector<std::uint32_t> tuple = T;
          tuple[slot] = static_cast<std::uint32_t>(k);
          ExteriorBasis::Sorted sorted = basis.sort_tuple(tuple);
          if (sorted.zero) continue;
          Scalar coeff = -pk;
          if (sorted.sign < 0) coeff = -coeff;
          for (std::size_t v = 0; v < dm; ++v)
            act.add_to(t * dm + v, sorted.index * dm + v, coeff);
        }
    }
    out.push_back(std::move(act));
  }
  return out;
}

std::vector<Matrix> induced_action_on_cohomology(const LieModule& M,
                                                 const std::vector<Matrix>& phi,
                                                 const std::vector<Matrix>& rho_out,
                                                 std::size_t q) {
  std::vector<CohomologyDegree> coh = cohomology(M);
  const CohomologyDegree& deg = coh[q];
  std::vector<Matrix> cochain_action = restrict_action_to_cochains(M, phi, rho_out, q);
  std::vector<Matrix> out;
  out.reserve(cochain_action.size());
  for (const Matrix& act : cochain_action) {
    try {
      out.push_back(induced_map_on_quotients(act, deg.cocycles, deg.coboundaries,
                                             deg.cocycles, deg.coboundaries));
    } catch (const QuotientPreconditionError& e) {
      throw InternalInvariantError(
          std::string("cochain action does not descend to cohomology: ") + e.what());
    }
  }
  return out;
}

} // namespace hsseq
