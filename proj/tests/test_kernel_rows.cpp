#include <doctest.h>

#include "hsseq/coefficient_rows.hpp"
#include "support/builders.hpp"

using namespace hsseq;
using namespace hsseq::testing;

namespace {

const Field Q = Field::rationals();

LieAlgebra line(const Field& f) { return LieAlgebra({"u"}, StructureConstants(1, f)); }

CoefficientData trivial_coefficients(std::size_t dm, std::size_t kernel_mats,
                                     std::size_t dh, const Field& f) {
  CoefficientData m;
  m.dim = dm;
  m.kernel_action.assign(kernel_mats, Matrix::zero(dm, dm, f));
  m.quotient_action.assign(dh, Matrix::zero(dm, dm, f));
  return m;
}

} // namespace

TEST_CASE("finite-dimensional rows: abelian kernel with trivial action") {
  SplitExtension ext = heisenberg_extension(Q);
  CoefficientRows rows = rows_finite_dim(ext);
  CHECK(rows.max_q == 2);
  CHECK(rows.dims == std::vector<std::size_t>{1, 2, 1});
  for (const Matrix& d : rows.d_vert) CHECK(d.is_zero());
  CHECK_NOTHROW(check_rows_invariants(rows, ext.quotient()));
}

TEST_CASE("finite-dimensional rows: one-dimensional kernel") {
  // kernel k = <y> acting on M = k^2 by a nilpotent shift
  LieAlgebra n = LieAlgebra({"y"}, StructureConstants(1, Q));
  Matrix e12(2, 2, Q);
  e12.set(0, 1, Scalar::one(Q));
  Matrix diag(2, 2, Q);
  diag.set(0, 0, Scalar::one(Q));
  CoefficientData m;
  m.dim = 2;
  m.kernel_action = {e12};
  m.quotient_action = {diag};
  SplitExtension ext(FiniteDimKernel{n}, line(Q),
                     FiniteDimAction{{Matrix::identity(1, Q)}}, m);
  CoefficientRows rows = rows_finite_dim(ext);
  CHECK(rows.dims == std::vector<std::size_t>{2, 2});
  CHECK(rows.d_vert[0] == e12);
  CHECK_NOTHROW(check_rows_invariants(rows, ext.quotient()));
}

TEST_CASE("finite-dimensional rows: Heisenberg kernel") {
  LieAlgebra n = heisenberg(Q);
  Matrix grading(3, 3, Q);
  grading.set(0, 0, Scalar::one(Q));
  grading.set(1, 1, Scalar::one(Q));
  grading.set(2, 2, Scalar::of(2, Q));
  SplitExtension ext(FiniteDimKernel{n}, line(Q), FiniteDimAction{{grading}},
                     trivial_coefficients(1, 3, 1, Q));
  CoefficientRows rows = rows_finite_dim(ext);
  CHECK(rows.dims == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(rows.d_vert[0].is_zero());
  CHECK(rows.d_vert[1] == Matrix::of_rows(Q, {{0, 0, -1}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(rows.d_vert[2].is_zero());
  CHECK_NOTHROW(check_rows_invariants(rows, ext.quotient()));
}

TEST_CASE("free kernel rows") {
  std::vector<std::string> gens = {"g1", "g2"};
  SUBCASE("trivial coefficients, bracket image acts as zero") {
    FreeAction act;
    act.images = {{parse_lie_expression("[g1,g2]", gens, Q), NcPolynomial::zero(Q)}};
    CoefficientData m = trivial_coefficients(1, 0, 1, Q);
    m.kernel_action.clear();
    SplitExtension ext(FreeKernel{gens}, line(Q), act, m);
    CoefficientRows rows = rows_free_kernel(ext);
    CHECK(rows.max_q == 1);
    CHECK(rows.dims == std::vector<std::size_t>{1, 2});
    CHECK(rows.d_vert[0].is_zero());
    // [g1,g2] = (g1) g2 - (g2) g1 has no linear part, so under trivial
    // coefficients the induced action on R^1 vanishes
    CHECK(rows.h_action[1][0].is_zero());
    CHECK_NOTHROW(check_rows_invariants(rows, ext.quotient()));
  }
  SUBCASE("nontrivial coefficients feed the generator matrices through words") {
    std::vector<std::string> one = {"g1"};
    FreeAction act;
    act.images = {{parse_lie_expression("g1", one, Q)}};
    Matrix e12(2, 2, Q);
    e12.set(0, 1, Scalar::one(Q));
    Matrix diag(2, 2, Q);
    diag.set(0, 0, Scalar::one(Q));
    CoefficientData m;
    m.dim = 2;
    m.kernel_action = {e12};
    m.quotient_action = {diag};
    SplitExtension ext(FreeKernel{one}, line(Q), act, m);
    CoefficientRows rows = rows_free_kernel(ext);
    CHECK(rows.dims == std::vector<std::size_t>{2, 2});
    CHECK(rows.d_vert[0] == e12);
    CHECK(rows.h_action[0][0] == diag);
    CHECK(rows.h_action[1][0] == diag - Matrix::identity(2, Q));
    CHECK_NOTHROW(check_rows_invariants(rows, ext.quotient()));
  }
}

TEST_CASE("free(1) matches the one-dimensional abelian kernel row for row") {
  // same coefficients and action through both constructions
  Matrix e12(2, 2, Q);
  e12.set(0, 1, Scalar::one(Q));
  Matrix diag(2, 2, Q);
  diag.set(0, 0, Scalar::one(Q));
  CoefficientData m;
  m.dim = 2;
  m.kernel_action = {e12};
  m.quotient_action = {diag};

  std::vector<std::string> one = {"y"};
  FreeAction fact;
  fact.images = {{parse_lie_expression("y", one, Q)}};
  SplitExtension free_ext(FreeKernel{one}, line(Q), fact, m);

  LieAlgebra n = LieAlgebra({"y"}, StructureConstants(1, Q));
  SplitExtension finite_ext(FiniteDimKernel{n}, line(Q),
                            FiniteDimAction{{Matrix::identity(1, Q)}}, m);

  CoefficientRows a = rows_free_kernel(free_ext);
  CoefficientRows b = rows_finite_dim(finite_ext);
  CHECK(a.dims == b.dims);
  CHECK(a.max_q == b.max_q);
  for (std::size_t q = 0; q <= a.max_q; ++q) {
    CHECK(a.d_vert[q] == b.d_vert[q]);
    CHECK(a.h_action[q][0] == b.h_action[q][0]);
  }
}

TEST_CASE("free plus abelian rows") {
  SUBCASE("cross action maps the generator slot into the wedge slot") {
    DirectSumKernel ds{{"g1"}, false, {"t1"}};
    DirectSumAction act;
    DirectSumAction::PerGenerator g;
    g.on_free = {NcPolynomial::zero(Q)};
    g.on_second = Matrix::zero(1, 1, Q);
    Matrix cross(1, 1, Q);
    cross.set(0, 0, Scalar::one(Q));
    g.cross = cross;
    act.gens.push_back(g);
    SplitExtension ext(ds, line(Q), act, trivial_coefficients(1, 0, 1, Q));
    CoefficientRows rows = rows_direct_sum(ext);
    CHECK(rows.max_q == 2);
    CHECK(rows.dims == std::vector<std::size_t>{1, 2, 1});
    for (const Matrix& d : rows.d_vert) CHECK(d.is_zero());
    CHECK(rows.h_action[1][0] == Matrix::of_rows(Q, {{0, 0}, {-1, 0}}));
    CHECK(rows.h_action[2][0].is_zero());
    CHECK_NOTHROW(check_rows_invariants(rows, ext.quotient()));
  }
  SUBCASE("zero free rank reduces to the abelian kernel rows") {
    DirectSumKernel ds{{}, false, {"t1", "t2"}};
    DirectSumAction act;
    DirectSumAction::PerGenerator g;
    Matrix on_ab(2, 2, Q);
    on_ab.set(1, 0, Scalar::one(Q));
    g.on_second = on_ab;
    act.gens.push_back(g);
    SplitExtension ext(ds, line(Q), act, trivial_coefficients(1, 0, 1, Q));
    CoefficientRows rows = rows_direct_sum(ext);

    SplitExtension ref = heisenberg_extension(Q);
    CoefficientRows ref_rows = rows_finite_dim(ref);
    CHECK(rows.dims == ref_rows.dims);
    CHECK(rows.max_q == ref_rows.max_q);
    for (std::size_t q = 0; q <= rows.max_q; ++q)
      CHECK(rows.h_action[q][0] == ref_rows.h_action[q][0]);
  }
  SUBCASE("zero abelian part reduces to the free kernel rows") {
    DirectSumKernel ds{{"g1", "g2"}, false, {}};
    DirectSumAction act;
    DirectSumAction::PerGenerator g;
    g.on_free = {parse_lie_expression("g2", {"g1", "g2"}, Q),
                 parse_lie_expression("[g1,g2] - g1", {"g1", "g2"}, Q)};
    g.on_second = Matrix::zero(0, 0, Q);
    act.gens.push_back(g);
    SplitExtension ext(ds, line(Q), act, trivial_coefficients(1, 0, 1, Q));
    CoefficientRows rows = rows_direct_sum(ext);

    FreeAction fact;
    fact.images = {g.on_free};
    CoefficientData m = trivial_coefficients(1, 0, 1, Q);
    m.kernel_action.clear();
    SplitExtension ref(FreeKernel{{"g1", "g2"}}, line(Q), fact, m);
    CoefficientRows ref_rows = rows_free_kernel(ref);
    CHECK(rows.dims == ref_rows.dims);
    CHECK(rows.max_q == ref_rows.max_q);
    for (std::size_t q = 0; q <= rows.max_q; ++q)
      CHECK(rows.h_action[q][0] == ref_rows.h_action[q][0]);
  }
}

TEST_CASE("free plus free rows") {
  DirectSumKernel ds{{"g1"}, true, {"w1", "w2"}};
  DirectSumAction act;
  DirectSumAction::PerGenerator g;
  g.on_free = {parse_lie_expression("2*g1", {"g1"}, Q)};
  g.on_second = std::vector<NcPolynomial>{
      parse_lie_expression("[w1,w2]", {"w1", "w2"}, Q),
      parse_lie_expression("w2", {"w1", "w2"}, Q)};
  act.gens.push_back(g);
  SplitExtension ext(ds, line(Q), act, trivial_coefficients(1, 0, 1, Q));
  CoefficientRows rows = rows_direct_sum(ext);
  CHECK(rows.max_q == 2);
  CHECK(rows.dims == std::vector<std::size_t>{1, 3, 2});
  for (const Matrix& d : rows.d_vert) CHECK(d.is_zero());
  // R^1 in basis (g1, w1, w2): linear parts -diag(2, 0, 1)
  CHECK(rows.h_action[1][0] ==
        Matrix::of_rows(Q, {{-2, 0, 0}, {0, 0, 0}, {0, 0, -1}}));
  // R^2 in basis (g1 (x) w1, g1 (x) w2)
  CHECK(rows.h_action[2][0] == Matrix::of_rows(Q, {{-2, 0}, {0, -3}}));
  CHECK_NOTHROW(check_rows_invariants(rows, ext.quotient()));
}

TEST_CASE("free product rows") {
  SUBCASE("two one-dimensional abelian factors match the free kernel on two generators") {
    FreeProductKernel fp;
    fp.factors = {{false, {"t1"}}, {false, {"t2"}}};
    FreeProductAction act;
    Matrix lam(1, 1, Q), mu(1, 1, Q);
    lam.set(0, 0, Scalar::of(3, Q));
    mu.set(0, 0, Scalar::of(-1, Q));
    act.gens = {{lam, mu}};
    SplitExtension ext(fp, line(Q), act, trivial_coefficients(1, 0, 1, Q));
    CoefficientRows rows = rows_free_product(ext);

    std::vector<std::string> gens = {"t1", "t2"};
    FreeAction fact;
    fact.images = {{parse_lie_expression("3*t1", gens, Q),
                    parse_lie_expression("-t2", gens, Q)}};
    CoefficientData m = trivial_coefficients(1, 0, 1, Q);
    m.kernel_action.clear();
    SplitExtension ref(FreeKernel{gens}, line(Q), fact, m);
    CoefficientRows ref_rows = rows_free_kernel(ref);

    CHECK(rows.dims == ref_rows.dims);
    CHECK(rows.max_q == ref_rows.max_q);
    for (std::size_t q = 0; q <= rows.max_q; ++q)
      CHECK(rows.h_action[q][0] == ref_rows.h_action[q][0]);
  }
  SUBCASE("abelian plane with a free line contributes one dimension in degree two") {
    FreeProductKernel fp;
    fp.factors = {{false, {"t1", "t2"}}, {true, {"g1"}}};
    FreeProductAction act;
    Matrix ab(2, 2, Q);
    ab.set(0, 1, Scalar::one(Q));
    act.gens = {{ab, std::vector<NcPolynomial>{NcPolynomial::zero(Q)}}};
    SplitExtension ext(fp, line(Q), act, trivial_coefficients(1, 0, 1, Q));
    CoefficientRows rows = rows_free_product(ext);
    CHECK(rows.max_q == 2);
    CHECK(rows.dims == std::vector<std::size_t>{1, 3, 1});
    CHECK_NOTHROW(check_rows_invariants(rows, ext.quotient()));
  }
  SUBCASE("a single factor reduces to that factor's rows") {
    FreeProductKernel fp;
    fp.factors = {{false, {"t1", "t2"}}};
    FreeProductAction act;
    Matrix ab(2, 2, Q);
    ab.set(1, 0, Scalar::one(Q));
    act.gens = {{ab}};
    SplitExtension ext(fp, line(Q), act, trivial_coefficients(1, 0, 1, Q));
    CoefficientRows rows = rows_free_product(ext);

    SplitExtension ref = heisenberg_extension(Q);
    CoefficientRows ref_rows = rows_finite_dim(ref);
    CHECK(rows.dims == ref_rows.dims);
    for (std::size_t q = 0; q <= rows.max_q; ++q)
      CHECK(rows.h_action[q][0] == ref_rows.h_action[q][0]);
  }
}

TEST_CASE("nontrivial kernel action is rejected for the restricted families") {
  DirectSumKernel ds{{"g1"}, false, {"t1"}};
  DirectSumAction act;
  DirectSumAction::PerGenerator g;
  g.on_free = {NcPolynomial::zero(Q)};
  g.on_second = Matrix::zero(1, 1, Q);
  act.gens.push_back(g);
  CoefficientData m;
  m.dim = 1;
  m.kernel_action = {Matrix::identity(1, Q)};
  m.quotient_action = {Matrix::zero(1, 1, Q)};
  CHECK_THROWS_AS(SplitExtension(ds, line(Q), act, m), ValidationError);
}

TEST_CASE("row cohomology of a finite-dimensional kernel matches the cochain complex") {
  for (const SplitExtension& ext : {heisenberg_extension(Q), nonabelian2_extension(Q)}) {
    CoefficientRows rows = rows_finite_dim(ext);
    std::vector<LieModule> via_rows = row_cohomology_modules(rows, ext.quotient());
    std::vector<std::size_t> betti = betti_numbers(kernel_module(ext));
    const auto& phi = std::get<FiniteDimAction>(ext.action()).phi;
    REQUIRE(via_rows.size() == betti.size());
    for (std::size_t q = 0; q < betti.size(); ++q) {
      CHECK(via_rows[q].dim() == betti[q]);
      std::vector<Matrix> induced = induced_action_on_cohomology(
          kernel_module(ext), phi, ext.coefficients().quotient_action, q);
      for (std::size_t a = 0; a < induced.size(); ++a)
        CHECK(via_rows[q].rho(a) == induced[a]);
    }
  }
}

TEST_CASE("row cohomology modules carry the induced action") {
  SplitExtension ext = nonabelian2_extension(Q);
  CoefficientRows rows = coefficient_rows(ext);
  std::vector<LieModule> modules = row_cohomology_modules(rows, ext.quotient());
  REQUIRE(modules.size() == 2);
  CHECK(modules[0].dim() == 1);
  CHECK(modules[1].dim() == 1);
  // H^1(n) = n^* with x acting by -1
  CHECK(modules[1].rho(0) == Matrix::of_rows(Q, {{-1}}));
}
