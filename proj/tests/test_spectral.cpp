#include <doctest.h>

#include "hsseq/spectral_sequence.hpp"
#include "support/builders.hpp"

using namespace hsseq;
using namespace hsseq::testing;

namespace {

const Field Q = Field::rationals();

SplitExtension trivial_line_extension(const Field& f) {
  LieAlgebra n = LieAlgebra({"s"}, StructureConstants(1, f));
  LieAlgebra h = LieAlgebra({"x"}, StructureConstants(1, f));
  CoefficientData m;
  m.dim = 1;
  m.kernel_action = {Matrix::zero(1, 1, f)};
  m.quotient_action = {Matrix::zero(1, 1, f)};
  return SplitExtension(FiniteDimKernel{n}, h, FiniteDimAction{{Matrix::zero(1, 1, f)}},
                        m);
}

/// k^3 with the adjoint-style sl2 action as the kernel.
SplitExtension k3_by_sl2(const Field& f) {
  LieAlgebra n = LieAlgebra::abelian(3, f);
  LieAlgebra h = sl2(f);
  std::vector<Matrix> phi;
  for (std::size_t a = 0; a < 3; ++a) phi.push_back(sl2(f).ad(a));
  CoefficientData m;
  m.dim = 1;
  m.kernel_action.assign(3, Matrix::zero(1, 1, f));
  m.quotient_action.assign(3, Matrix::zero(1, 1, f));
  return SplitExtension(FiniteDimKernel{n}, h, FiniteDimAction{std::move(phi)}, m);
}

} // namespace

TEST_CASE("double complex of the trivial line extension") {
  DoubleComplex dc = build_double_complex(trivial_line_extension(Q));
  CHECK(dc.h_dim() == 1);
  CHECK(dc.max_q() == 1);
  for (std::size_t p = 0; p <= 1; ++p)
    for (std::size_t q = 0; q <= 1; ++q) {
      CHECK(dc.cell_dim(p, q) == 1);
      CHECK(dc.horizontal(p, q).is_zero());
      CHECK(dc.vertical(p, q).is_zero());
    }
  CHECK(total_cohomology(dc) == std::vector<std::size_t>{1, 2, 1});
  SpectralPage e2 = page(dc, 2);
  CHECK(e2.dimension_table() ==
        std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}});
  CollapseInfo info = length_and_collapse(dc);
  CHECK(info.length == 2);
  CHECK(info.census.empty());
}

TEST_CASE("two-dimensional nonabelian extension") {
  DoubleComplex dc = build_double_complex(nonabelian2_extension(Q));
  // horizontal differential on row q=1 is the quotient acting by -1
  CHECK(dc.horizontal(0, 1) == Matrix::of_rows(Q, {{-1}}));
  CHECK(total_cohomology(dc) == std::vector<std::size_t>{1, 1, 0});
  SpectralPage e2 = page(dc, 2);
  CHECK(e2.dimension_table() ==
        std::vector<std::vector<std::size_t>>{{1, 0}, {1, 0}});
  // page 1 sees the full rows, page 2 is their horizontal cohomology
  SpectralPage e1 = page(dc, 1);
  CHECK(e1.dimension_table() ==
        std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}});
  bool found_nonzero_d1 = false;
  for (std::size_t p = 0; p <= 1; ++p)
    for (std::size_t q = 0; q <= 1; ++q)
      if (!e1.at(p, q).d.is_zero()) found_nonzero_d1 = true;
  CHECK(found_nonzero_d1);
}

TEST_CASE("Heisenberg extension pages and totals") {
  DoubleComplex dc = build_double_complex(heisenberg_extension(Q));
  CHECK(total_cohomology(dc) == std::vector<std::size_t>{1, 2, 2, 1});
  SpectralPage e2 = page(dc, 2);
  // dimensions by column p, row q
  CHECK(e2.dimension_table() ==
        std::vector<std::vector<std::size_t>>{{1, 1, 1}, {1, 1, 1}});
  CollapseInfo info = length_and_collapse(dc);
  CHECK(info.length == 2);
  CHECK(info.census.empty());
  CHECK(info.pages.front().same_dimensions(info.pages.back()));
}

TEST_CASE("early pages: E_0 is the bigraded complex and d_0 the vertical differential") {
  // Heisenberg kernel with the grading derivation: nonzero vertical maps
  LieAlgebra n = heisenberg(Q);
  Matrix grading(3, 3, Q);
  grading.set(0, 0, Scalar::one(Q));
  grading.set(1, 1, Scalar::one(Q));
  grading.set(2, 2, Scalar::of(2, Q));
  LieAlgebra h = LieAlgebra({"x"}, StructureConstants(1, Q));
  CoefficientData m;
  m.dim = 1;
  m.kernel_action.assign(3, Matrix::zero(1, 1, Q));
  m.quotient_action.assign(1, Matrix::zero(1, 1, Q));
  SplitExtension ext(FiniteDimKernel{n}, h, FiniteDimAction{{grading}}, m);

  DoubleComplex dc = build_double_complex(ext);
  SpectralWorkspace ws(dc);
  SpectralPage e0 = ws.page(0);
  bool saw_nonzero_d0 = false;
  for (std::size_t p = 0; p <= e0.p_max(); ++p)
    for (std::size_t q = 0; q <= e0.q_max(); ++q) {
      CHECK(e0.at(p, q).dim == dc.cell_dim(p, q));
      const Matrix& d0 = e0.at(p, q).d;
      if (!d0.is_zero()) saw_nonzero_d0 = true;
      if (d0.rows() == dc.cell_dim(p, q + 1) && d0.cols() == dc.cell_dim(p, q))
        CHECK(rank(d0) == rank(dc.vertical(p, q)));
    }
  CHECK(saw_nonzero_d0);

  // E_1 is the vertical cohomology, here H^q(n, M) in each column
  SpectralPage e1 = ws.page(1);
  std::vector<std::size_t> row_betti = betti_numbers(kernel_module(ext));
  for (std::size_t p = 0; p <= 1; ++p)
    for (std::size_t q = 0; q <= 3; ++q) CHECK(e1.at(p, q).dim == row_betti[q]);
}

TEST_CASE("pages stabilize bit for bit") {
  DoubleComplex dc = build_double_complex(heisenberg_extension(Q));
  SpectralWorkspace ws(dc);
  std::size_t stab = ws.stabilization_page();
  SpectralPage a = ws.page(stab);
  SpectralPage b = ws.page(stab + 1);
  SpectralPage c = ws.page(stab + 3);
  for (std::size_t p = 0; p <= a.p_max(); ++p)
    for (std::size_t q = 0; q <= a.q_max(); ++q) {
      CHECK(a.at(p, q).cycles == b.at(p, q).cycles);
      CHECK(a.at(p, q).divisor == b.at(p, q).divisor);
      CHECK(a.at(p, q).cycles == c.at(p, q).cycles);
      CHECK(a.at(p, q).dim == c.at(p, q).dim);
    }
}

TEST_CASE("k^3 by sl2 with the adjoint-style action") {
  SplitExtension ext = k3_by_sl2(Q);
  DoubleComplex dc = build_double_complex(ext);
  std::vector<std::size_t> oracle = betti_numbers(total_module(ext));
  CHECK(oracle == std::vector<std::size_t>{1, 0, 0, 2, 0, 0, 1});
  CHECK(total_cohomology(dc) == oracle);
  SpectralPage e2 = page(dc, 2);
  // invariant theory concentrates everything in the grid corners
  std::vector<std::vector<std::size_t>> expect(4, std::vector<std::size_t>(4, 0));
  expect[0][0] = expect[0][3] = expect[3][0] = expect[3][3] = 1;
  CHECK(e2.dimension_table() == expect);
  CollapseInfo info = length_and_collapse(dc);
  CHECK(info.length == 2);
}

TEST_CASE("E_2 identification and abutment for assorted extensions") {
  std::vector<SplitExtension> corpus;
  corpus.push_back(trivial_line_extension(Q));
  corpus.push_back(nonabelian2_extension(Q));
  corpus.push_back(heisenberg_extension(Q));
  corpus.push_back(k3_by_sl2(Q));
  corpus.push_back(heisenberg_extension(Field::prime(2)));
  corpus.push_back(nonabelian2_extension(Field::prime(3)));
  for (const SplitExtension& ext : corpus) {
    DoubleComplex dc = build_double_complex(ext);
    SpectralWorkspace ws(dc);
    SpectralPage e2 = ws.page(2);
    CHECK(e2.dimension_table() == e2_reference_grid(ext));
    SpectralPage stable = ws.page(ws.stabilization_page());
    std::vector<std::size_t> oracle = betti_numbers(total_module(ext));
    for (std::size_t n = 0; n <= dc.top_degree(); ++n) {
      std::size_t diag = 0;
      for (std::size_t p = 0; p <= std::min(n, dc.h_dim()); ++p)
        if (n - p <= dc.max_q()) diag += stable.at(p, n - p).dim;
      CHECK(diag == oracle[n]);
    }
  }
}

TEST_CASE("page homology consistency from the first page on") {
  std::vector<SplitExtension> corpus;
  corpus.push_back(nonabelian2_extension(Q));
  corpus.push_back(heisenberg_extension(Q));
  corpus.push_back(k3_by_sl2(Q));
  for (const SplitExtension& ext : corpus) {
    DoubleComplex dc = build_double_complex(ext);
    SpectralWorkspace ws(dc);
    for (std::size_t r = 1; r <= ws.stabilization_page(); ++r) {
      SpectralPage cur = ws.page(r);
      SpectralPage next = ws.page(r + 1);
      for (std::size_t p = 0; p <= cur.p_max(); ++p)
        for (std::size_t q = 0; q <= cur.q_max(); ++q) {
          std::size_t outgoing_rank = rank(cur.at(p, q).d);
          std::size_t incoming_rank = 0;
          if (p >= r && q + r <= cur.q_max() + 1 && q + r >= 1)
            incoming_rank = rank(cur.at(p - r, q + r - 1).d);
          CHECK(next.at(p, q).dim ==
                cur.at(p, q).dim - outgoing_rank - incoming_rank);
        }
    }
  }
}

TEST_CASE("pages vanish outside the first-quadrant rectangle") {
  DoubleComplex dc = build_double_complex(heisenberg_extension(Q));
  SpectralWorkspace ws(dc);
  for (std::size_t r = 2; r <= 4; ++r) {
    // bidegrees past the quotient dimension or the top row
    for (auto [p, q] : {std::pair<long, long>{2, 1}, {0, 3}, {3, 0}}) {
      std::size_t n = static_cast<std::size_t>(p + q);
      if (n > dc.top_degree()) continue;
      std::size_t dim = ws.cycles(r, p, n).dim() - ws.divisor(r, p, n).dim();
      CHECK(dim == 0);
    }
  }
}

TEST_CASE("transposed totalization gives the same betti numbers") {
  for (const SplitExtension& ext :
       {heisenberg_extension(Q), nonabelian2_extension(Q), k3_by_sl2(Q)}) {
    DoubleComplex dc = build_double_complex(ext);
    CHECK(total_cohomology(dc) == transposed_total_cohomology(dc));
  }
}

TEST_CASE("theorem suite on the Heisenberg extension") {
  TheoremReport rep = verify_theorems(heisenberg_extension(Q));
  REQUIRE(rep.checks.size() == 5);
  for (const auto& c : rep.checks) {
    if (c.id == "zero_row_vanishing" || c.id == "collapse_at_e2" ||
        c.id == "length_bound" || c.id == "e2_identification" || c.id == "convergence") {
      CHECK(c.hypotheses_met);
      CHECK(c.pass);
    }
  }
  CHECK_FALSE(rep.any_violation());
}

TEST_CASE("theorem suite marks unmet hypotheses") {
  // nontrivial kernel action: collapse and length statements do not apply
  LieAlgebra n = LieAlgebra({"y"}, StructureConstants(1, Q));
  LieAlgebra h = LieAlgebra({"x"}, StructureConstants(1, Q));
  Matrix e12(2, 2, Q), diag(2, 2, Q);
  e12.set(0, 1, Scalar::one(Q));
  diag.set(0, 0, Scalar::one(Q));
  CoefficientData m;
  m.dim = 2;
  m.kernel_action = {e12};
  m.quotient_action = {diag};
  SplitExtension ext(FiniteDimKernel{n}, h, FiniteDimAction{{Matrix::identity(1, Q)}},
                     m);
  TheoremReport rep = verify_theorems(ext);
  bool saw_unmet = false;
  for (const auto& c : rep.checks) {
    if (c.id == "collapse_at_e2" || c.id == "length_bound") {
      CHECK_FALSE(c.hypotheses_met);
      saw_unmet = true;
    }
    if (c.id == "e2_identification" || c.id == "convergence") {
      CHECK(c.hypotheses_met);
      CHECK(c.pass);
    }
  }
  CHECK(saw_unmet);
  CHECK_FALSE(rep.any_violation());
}

TEST_CASE("theorem suite on a free kernel") {
  std::vector<std::string> gens = {"g1", "g2"};
  FreeAction act;
  act.images = {{parse_lie_expression("[g1,g2]", gens, Q), NcPolynomial::zero(Q)}};
  CoefficientData m;
  m.dim = 1;
  m.quotient_action = {Matrix::zero(1, 1, Q)};
  LieAlgebra h = LieAlgebra({"x"}, StructureConstants(1, Q));
  SplitExtension ext(FreeKernel{gens}, h, act, m);
  DoubleComplex dc = build_double_complex(ext);
  // rows (1, 2), all differentials zero: totals 1, 3, 2
  CHECK(total_cohomology(dc) == std::vector<std::size_t>{1, 3, 2});
  TheoremReport rep = verify_theorems(ext);
  for (const auto& c : rep.checks) {
    if (c.id == "collapse_at_e2") {
      CHECK(c.hypotheses_met);
      CHECK(c.pass);
    }
    if (c.id == "convergence") CHECK_FALSE(c.hypotheses_met);
  }
  CHECK_FALSE(rep.any_violation());
}

TEST_CASE("zero-dimensional quotient concentrates in the first column") {
  // the kernel equals the whole algebra; sl2 with trivial coefficients
  LieAlgebra h0 = LieAlgebra({}, StructureConstants(0, Q));
  CoefficientData m;
  m.dim = 1;
  m.kernel_action.assign(3, Matrix::zero(1, 1, Q));
  SplitExtension ext(FiniteDimKernel{sl2(Q)}, h0, FiniteDimAction{{}}, m);
  DoubleComplex dc = build_double_complex(ext);
  CHECK(total_cohomology(dc) == std::vector<std::size_t>{1, 0, 0, 1});
  SpectralPage e2 = page(dc, 2);
  CHECK(e2.dimension_table() ==
        std::vector<std::vector<std::size_t>>{{1, 0, 0, 1}});
  CHECK_FALSE(verify_theorems(ext).any_violation());
}
