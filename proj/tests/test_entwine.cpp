#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fockforge/entwine.hpp"

using namespace fockforge;

namespace {

AlgebraPresentation group_algebra_z2() {
  AlgebraPresentation a;
  a.dim = 2;
  a.mult = Matrix(2, 4);
  a.mult << 1, 0, 0, 1,
            0, 1, 1, 0;
  a.unit = Vector::Zero(2);
  a.unit(0) = 1;
  return a;
}

CoalgebraPresentation grouplike_coalgebra() {
  CoalgebraPresentation c;
  c.dim = 2;
  c.comult = Matrix(4, 2);
  c.comult << 1, 0,
              0, 0,
              0, 0,
              0, 1;
  c.counit = Matrix(1, 2);
  c.counit << 1, 1;
  return c;
}

CoalgebraPresentation dual_coalgebra_z2() {
  CoalgebraPresentation c;
  c.dim = 2;
  c.comult = Matrix(4, 2);
  c.comult << 1, 0,
              0, 1,
              0, 1,
              1, 0;
  c.counit = Matrix(1, 2);
  c.counit << 1, 0;
  return c;
}

Matrix flip4() {
  Matrix t(4, 4);
  t << 1, 0, 0, 0,
       0, 0, 1, 0,
       0, 1, 0, 0,
       0, 0, 0, 1;
  return t;
}

EntwiningStructure flip_entwining() {
  return EntwiningStructure{group_algebra_z2(), grouplike_coalgebra(), flip4()};
}

double worst(const std::vector<CheckResult>& v) {
  double w = 0.0;
  for (const auto& c : v) w = std::max(w, c.residual);
  return w;
}

bool all_pass(const std::vector<CheckResult>& v) {
  for (const auto& c : v)
    if (!c.pass) return false;
  return true;
}

const CheckResult& by_name(const std::vector<CheckResult>& v, const std::string& name) {
  for (const auto& c : v)
    if (c.name == name) return c;
  throw std::logic_error("missing check " + name);
}

}  // namespace

TEST_CASE("algebra and coalgebra presentations validate") {
  CHECK(all_pass(group_algebra_z2().validate()));
  CHECK(all_pass(grouplike_coalgebra().validate()));
  CHECK(all_pass(dual_coalgebra_z2().validate()));

  AlgebraPresentation broken = group_algebra_z2();
  broken.mult(1, 1) = 0;  // x0 x1 no longer x1, unit law breaks
  auto checks = broken.validate();
  CHECK_FALSE(all_pass(checks));
  CHECK_FALSE(by_name(checks, "algebra_unit").pass);
}

TEST_CASE("flip entwining satisfies all four axioms") {
  auto checks = check_entwining(flip_entwining());
  REQUIRE(checks.size() == 8);
  CHECK(all_pass(checks));
  CHECK(worst(checks) == 0.0);
}

TEST_CASE("flip entwining against the dual coalgebra") {
  EntwiningStructure e{group_algebra_z2(), dual_coalgebra_z2(), flip4()};
  CHECK(all_pass(check_entwining(e)));
}

TEST_CASE("mutant taus fail exactly one axiom each") {
  const char* axioms[4] = {"entwine_axiom_1_multiplication", "entwine_axiom_2_unit",
                           "entwine_axiom_3_comultiplication", "entwine_axiom_4_counit"};

  Matrix mut1(4, 4), mut2(4, 4), mut3(4, 4), mut4(4, 4);
  mut1 << 1, 0, 0, 0,
          0, 0, 1, 0,
          0, 0, 0, 0,
          0, 1, 0, 1;
  mut2 << 1, 0, 1, 0,
          0, 0, 0, 0,
          0, 1, 0, 1,
          0, 0, 0, 0;
  mut3 << 1, 0, 0, 0,
          0, 0, 1, 0,
          0, 1, 0, 2,
          0, 0, 0, -1;
  mut4 << 1, 0, 0, 0,
          0, 0, 1, 1,
          0, 1, 0, 0,
          0, 0, 0, 0;
  const Matrix muts[4] = {mut1, mut2, mut3, mut4};
  const double expected_residual[4] = {1.0, 1.0, 2.0, 1.0};

  for (int m = 0; m < 4; ++m) {
    INFO("mutant " << m + 1);
    EntwiningStructure e{group_algebra_z2(), grouplike_coalgebra(), muts[m]};
    auto checks = check_entwining(e);
    for (int ax = 0; ax < 4; ++ax) {
      const CheckResult& c = by_name(checks, axioms[ax]);
      if (ax == m) {
        CHECK_FALSE(c.pass);
        CHECK(c.residual == doctest::Approx(expected_residual[m]).epsilon(1e-12));
      } else {
        CHECK(c.pass);
      }
    }
  }
}

TEST_CASE("tau shape is validated") {
  EntwiningStructure e{group_algebra_z2(), grouplike_coalgebra(), Matrix::Identity(3, 3)};
  CHECK_THROWS_AS(check_entwining(e), std::invalid_argument);
}

TEST_CASE("entwined module over the flip entwining") {
  EntwinedModuleData m;
  m.dim = 2;
  m.action = group_algebra_z2().mult;  // regular module
  m.coaction = Matrix(4, 2);
  m.coaction << 1, 0,
                0, 0,
                0, 1,
                0, 0;  // constant coaction onto the first group-like
  auto checks = check_entwined_module(flip_entwining(), m);
  REQUIRE(checks.size() == 5);
  CHECK(all_pass(checks));

  // breaking the coaction breaks compatibility or the counit law
  EntwinedModuleData bad = m;
  bad.coaction(0, 0) = 0;
  bad.coaction(1, 0) = 1;
  CHECK_FALSE(all_pass(check_entwined_module(flip_entwining(), bad)));
}

TEST_CASE("iterated entwining composes") {
  EntwiningStructure e = flip_entwining();
  CHECK((psi_1n(e, 1) - e.tau).cwiseAbs().maxCoeff() == 0.0);
  CHECK((psi_1n(e, 0) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3 - m; ++n) {
      const Eigen::Index am = static_cast<Eigen::Index>(1) << m;
      const Eigen::Index an = static_cast<Eigen::Index>(1) << n;
      Matrix glued = kron(Matrix::Identity(am, am), psi_1n(e, n)) *
                     kron(psi_1n(e, m), Matrix::Identity(an, an));
      CHECK((glued - psi_1n(e, m + n)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("graded flip crossed product") {
  AlgebraPresentation dual_numbers;
  dual_numbers.dim = 2;
  dual_numbers.mult = Matrix(2, 4);
  dual_numbers.mult << 1, 0, 0, 0,
                       0, 1, 1, 0;
  dual_numbers.unit = Vector::Zero(2);
  dual_numbers.unit(0) = 1;
  REQUIRE(all_pass(dual_numbers.validate()));

  Matrix graded_flip(4, 4);
  graded_flip << 1, 0, 0, 0,
                 0, 0, 1, 0,
                 0, 1, 0, 0,
                 0, 0, 0, -1;

  CrossSymmetry s{dual_numbers, dual_numbers, graded_flip};
  CrossedProduct w = crossed_product(s);
  CHECK(all_pass(w.certification));
  CHECK_FALSE(w.associativity_witness.has_value());
  CHECK(w.algebra.dim == 4);

  // (1 (x) theta)(theta (x) 1) = -theta (x) theta, the other order is +
  Vector anti = w.algebra.mult.col(1 * 4 + 2);
  Vector direct = w.algebra.mult.col(2 * 4 + 1);
  CHECK(anti(3) == Complex(-1, 0));
  CHECK(direct(3) == Complex(1, 0));
  CHECK((anti + direct).cwiseAbs().maxCoeff() == 0.0);

  // unit of the crossed product
  CHECK(w.algebra.unit(0) == Complex(1, 0));
  CHECK(w.algebra.unit.tail(3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("crossed product with the plain flip is the tensor product algebra") {
  CrossSymmetry s{group_algebra_z2(), group_algebra_z2(), flip4()};
  CrossedProduct w = crossed_product(s);
  CHECK(all_pass(w.certification));
  // commutative: group algebra tensor group algebra
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK((w.algebra.mult.col(i * 4 + j) - w.algebra.mult.col(j * 4 + i))
                .cwiseAbs()
                .maxCoeff() == 0.0);
}

TEST_CASE("broken cross symmetry is detected") {
  Matrix bad = flip4();
  bad(3, 3) = 2.0;  // no longer compatible with multiplication
  CrossSymmetry s{group_algebra_z2(), group_algebra_z2(), bad};
  CrossedProduct w = crossed_product(s);
  CHECK_FALSE(all_pass(w.certification));
}

TEST_CASE("crossed product dimension cap") {
  AlgebraPresentation big;
  big.dim = 5;
  big.mult = Matrix::Zero(5, 25);
  big.unit = Vector::Zero(5);
  CrossSymmetry s{big, big, Matrix::Identity(25, 25)};
  CHECK_THROWS_AS(crossed_product(s), std::invalid_argument);
}

TEST_CASE("dual algebra of a coalgebra") {
  AlgebraPresentation d = dual_algebra(grouplike_coalgebra());
  CHECK(all_pass(d.validate()));
  // functions on two points multiply pointwise
  CHECK(d.mult.col(0)(0) == Complex(1, 0));  // f0 f0 = f0
  CHECK(d.mult.col(3)(1) == Complex(1, 0));  // f1 f1 = f1
  CHECK(d.mult.col(1).cwiseAbs().maxCoeff() == 0.0);  // f0 f1 = 0
  CHECK((d.unit - Vector::Ones(2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("factorization through the canonical dual") {
  DualFactorization fd = factorize_dual(flip_entwining());
  CHECK(fd.factorizable);
  CHECK((fd.tau_dual - flip4()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(all_pass(fd.checks));
  CHECK(fd.diagnostics.find("unique solution") != std::string::npos);
  bool found = false;
  for (const auto& c : fd.checks)
    if (c.name == "dual_factorization_equation") found = true;
  CHECK(found);
}

TEST_CASE("factorization refuses a non-entwining input") {
  Matrix mut(4, 4);
  mut << 1, 0, 1, 0,
         0, 0, 0, 0,
         0, 1, 0, 1,
         0, 0, 0, 0;
  EntwiningStructure e{group_algebra_z2(), grouplike_coalgebra(), mut};
  DualFactorization fd = factorize_dual(e);
  CHECK_FALSE(fd.factorizable);
  CHECK(fd.diagnostics.find("not attempted") != std::string::npos);
}
