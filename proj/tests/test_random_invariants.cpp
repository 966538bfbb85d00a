#include <doctest.h>

#include "support/builders.hpp"
#include "support/invariant_suite.hpp"

using namespace hsseq;
using namespace hsseq::testing;

TEST_CASE("structural invariants hold on randomized extensions") {
  RandomSource rnd(424242);
  std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(3),
                               Field::prime(5)};
  int count = 0;
  for (int trial = 0; trial < 32; ++trial) {
    const Field& f = fields[trial % fields.size()];
    SplitExtension ext = random_extension(rnd, f);
    std::vector<std::string> failures =
        structural_failures(ext, "random #" + std::to_string(trial));
    for (const auto& msg : failures) FAIL_CHECK(msg);
    ++count;
  }
  CHECK(count == 32);
}

TEST_CASE("length bound holds on randomized trivial-coefficient extensions") {
  RandomSource rnd(515151);
  for (int trial = 0; trial < 12; ++trial) {
    const Field f = (trial % 2 == 0) ? Field::rationals() : Field::prime(3);
    LieAlgebra n = random_nilpotent(rnd, f);
    Matrix d = random_derivation(rnd, n);
    LieAlgebra h = LieAlgebra({"u"}, StructureConstants(1, f));
    CoefficientData m;
    m.dim = 1;
    m.kernel_action.assign(n.dim(), Matrix::zero(1, 1, f));
    m.quotient_action.assign(1, Matrix::zero(1, 1, f));
    SplitExtension ext(FiniteDimKernel{n}, h, FiniteDimAction{{d}}, m);
    TheoremReport rep = verify_theorems(ext);
    CHECK_FALSE(rep.any_violation());
  }
}
