#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fockforge/fock.hpp"

using namespace fockforge;

namespace {
double vec_diff(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

GradedFockSpace boson2(int n_max = 4) {
  return build_fock(make_boson_twist(2), make_b_operator(2, flip_matrix(2), 1.0), n_max);
}

GradedFockSpace fermion2(int n_max = 4) {
  return build_fock(make_fermion_twist(2), make_b_operator(2, -flip_matrix(2), 1.0), n_max);
}
}  // namespace

TEST_CASE("zero twist builds the full tensor algebra") {
  GradedFockSpace f = build_fock(make_zero_twist(2), std::nullopt, 3);
  CHECK(f.well_defined);
  const int dims[] = {1, 2, 4, 8};
  for (int n = 0; n <= 3; ++n) CHECK(f.dim(n) == dims[n]);
  for (int n = 0; n <= 3; ++n) {
    Eigen::Index d = f.gram_restricted[static_cast<std::size_t>(n)].rows();
    CHECK((f.gram_restricted[static_cast<std::size_t>(n)] - Matrix::Identity(d, d))
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
  CHECK(verify_ccr(f).residual == 0.0);
  CHECK(verify_adjointness(f).residual == 0.0);
}

TEST_CASE("boson and fermion quotient dimensions") {
  GradedFockSpace b = boson2();
  CHECK(b.well_defined);
  for (int n = 0; n <= 4; ++n) CHECK(b.dim(n) == n + 1);

  GradedFockSpace f = fermion2();
  CHECK(f.well_defined);
  const int dims[] = {1, 2, 1, 0, 0};
  for (int n = 0; n <= 4; ++n) CHECK(f.dim(n) == dims[n]);
  for (const auto& c : f.build_checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("creation from the vacuum") {
  GradedFockSpace b = boson2(2);
  for (int i = 1; i <= 2; ++i) {
    Vector vac = Vector::Ones(1);
    Vector s = creation_op(b, i, 0) * vac;
    CHECK(vec_diff(s, state_word(b, MultiIndex(2, {i}))) <= 1e-14);
  }
}

TEST_CASE("fermion square of a creation operator vanishes") {
  GradedFockSpace f = fermion2(3);
  Matrix square = creation_op(f, 1, 1) * creation_op(f, 1, 0);
  CHECK(square.cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("boson creations commute") {
  GradedFockSpace b = boson2(2);
  Vector vac = Vector::Ones(1);
  Vector u = creation_op(b, 1, 1) * (creation_op(b, 2, 0) * vac);
  Vector v = creation_op(b, 2, 1) * (creation_op(b, 1, 0) * vac);
  CHECK(vec_diff(u, v) <= 1e-14);
}

TEST_CASE("zero twist annihilation pairs the first letter") {
  GradedFockSpace f = build_fock(make_zero_twist(2), std::nullopt, 2);
  for (int i = 1; i <= 2; ++i) {
    for (int j1 = 1; j1 <= 2; ++j1) {
      for (int j2 = 1; j2 <= 2; ++j2) {
        Vector in = state_word(f, MultiIndex(2, {j1, j2}));
        Vector out = annihilate_twist_sum(f, i, 2) * in;
        Vector expect = (i == j1) ? state_word(f, MultiIndex(2, {j2}))
                                  : Vector(Vector::Zero(2));
        CHECK(vec_diff(out, expect) == 0.0);
      }
    }
  }
}

TEST_CASE("scalar q-deformed occupation numbers") {
  const double q = 0.5;
  GradedFockSpace f = build_fock(make_q_flip_twist(1, q), std::nullopt, 5);
  double qn = 0.0, qpow = 1.0;
  for (int n = 1; n <= 5; ++n) {
    qn += qpow;  // [n]_q = 1 + q + ... + q^{n-1}
    qpow *= q;
    Matrix a = annihilate_twist_sum(f, 1, n);
    REQUIRE(a.rows() == 1);
    CHECK(std::abs(a(0, 0) - Complex(qn, 0)) <= 1e-12);
  }
}

TEST_CASE("boson annihilation on a two-letter product") {
  GradedFockSpace b = boson2(2);
  Vector in = state_word(b, MultiIndex(2, {1, 2}));
  Vector out = annihilate_twist_sum(b, 1, 2) * in;
  CHECK(vec_diff(out, state_word(b, MultiIndex(2, {2}))) <= 1e-12);
}

TEST_CASE("twist-sum and gram-adjoint annihilators agree") {
  GradedFockSpace z = build_fock(make_zero_twist(2), std::nullopt, 3);
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= 2; ++i)
      CHECK((annihilate_adjoint(z, i, n) - annihilate_twist_sum(z, i, n)).cwiseAbs().maxCoeff() ==
            0.0);

  GradedFockSpace qf = build_fock(make_q_flip_twist(2, 0.5), std::nullopt, 3);
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= 2; ++i)
      CHECK((annihilate_adjoint(qf, i, n) - annihilate_twist_sum(qf, i, n)).cwiseAbs().maxCoeff() <=
            1e-10);
}

TEST_CASE("deformed commutation relations") {
  const double q = 0.5;
  GradedFockSpace f = build_fock(make_q_flip_twist(2, q), std::nullopt, 3);
  CheckResult ccr = verify_ccr(f);
  CHECK(ccr.pass);
  CHECK(ccr.name == "deformed_commutation_relations");

  // the q-relation in explicit operator form on levels 0..2
  for (int n = 0; n <= 2; ++n) {
    const Eigen::Index d = f.dim(n);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        Matrix lhs = annihilate_twist_sum(f, i, n + 1) * creation_op(f, j, n);
        if (n > 0) lhs -= q * creation_op(f, j, n - 1) * annihilate_twist_sum(f, i, n);
        if (i == j) lhs -= Matrix::Identity(d, d);
        CHECK(lhs.cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("canonical commutation relations on the symmetric quotient") {
  GradedFockSpace b = boson2(4);
  CHECK(verify_ccr(b).pass);
  for (int n = 1; n <= 3; ++n) {
    const Eigen::Index d = b.dim(n);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        Matrix comm = annihilate_twist_sum(b, i, n + 1) * creation_op(b, j, n) -
                      creation_op(b, j, n - 1) * annihilate_twist_sum(b, i, n);
        if (i == j) comm -= Matrix::Identity(d, d);
        CHECK(comm.cwiseAbs().maxCoeff() <= 1e-10);
      }
  }
}

TEST_CASE("canonical anticommutation relations on the antisymmetric quotient") {
  GradedFockSpace f = fermion2(4);
  CHECK(verify_ccr(f).pass);
  for (int n = 1; n <= 3; ++n) {
    const Eigen::Index d = f.dim(n);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        Matrix anti = annihilate_twist_sum(f, i, n + 1) * creation_op(f, j, n) +
                      creation_op(f, j, n - 1) * annihilate_twist_sum(f, i, n);
        if (i == j) anti -= Matrix::Identity(d, d);
        if (anti.size() > 0) CHECK(anti.cwiseAbs().maxCoeff() <= 1e-10);
      }
  }
}

TEST_CASE("adjointness of creation and annihilation") {
  for (const auto& f : {boson2(3), fermion2(3),
                        build_fock(make_q_flip_twist(2, -0.9), std::nullopt, 3)}) {
    CheckResult adj = verify_adjointness(f);
    CHECK(adj.name == "creation_annihilation_adjoint");
    CHECK(adj.pass);
  }
}

TEST_CASE("state words on the lambda quotient") {
  GradedFockSpace f = build_fock(make_epsilon_twist(lambda_epsilon_2()), std::nullopt, 3);
  const int dims[] = {1, 2, 1, 0};
  for (int n = 0; n <= 3; ++n) CHECK(f.dim(n) == dims[n]);
  Vector xy = state_word(f, MultiIndex(2, {1, 2}));
  Vector yx = state_word(f, MultiIndex(2, {2, 1}));
  CHECK(vec_diff(xy, yx) <= 1e-14);
  CHECK(state_word(f, MultiIndex(2, {1, 1})).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(state_word(f, MultiIndex(2, {2, 2})).cwiseAbs().maxCoeff() <= 1e-14);

  Vector vac = state_word(f, MultiIndex(2, {}));
  REQUIRE(vac.size() == 1);
  CHECK(vac(0) == Complex(1, 0));
}

TEST_CASE("operad composition") {
  GradedFockSpace z = build_fock(make_zero_twist(2), std::nullopt, 3);
  Vector x1 = state_word(z, MultiIndex(2, {1}));
  Vector x2 = state_word(z, MultiIndex(2, {2}));

  // unit law
  Vector vac = Vector::Ones(1);
  CHECK(vec_diff(operad_compose(z, vac, 0, {{x2, 1}}), x2) == 0.0);

  // free product is plain concatenation
  Vector pair = operad_compose(z, x1, 1, {{x2, 1}});
  CHECK(vec_diff(pair, state_word(z, MultiIndex(2, {1, 2}))) == 0.0);

  // symmetric product forgets the order
  GradedFockSpace b = boson2(3);
  Vector b1 = state_word(b, MultiIndex(2, {1}));
  Vector b2 = state_word(b, MultiIndex(2, {2}));
  Vector p12 = operad_compose(b, b1, 1, {{b2, 1}});
  CHECK(vec_diff(p12, state_word(b, MultiIndex(2, {1, 2}))) <= 1e-12);
  CHECK(vec_diff(p12, state_word(b, MultiIndex(2, {2, 1}))) <= 1e-12);

  // associativity of grafting
  Vector left = operad_compose(b, operad_compose(b, b1, 1, {{b2, 1}}), 2, {{b1, 1}});
  Vector right = operad_compose(b, b1, 1, {{operad_compose(b, b2, 1, {{b1, 1}}), 2}});
  CHECK(vec_diff(left, right) <= 1e-10);

  // quotient multiplication is associative on representatives
  Vector via_pairs = quotient_product(b, quotient_product(b, b1, 1, b2, 1), 2, b1, 1);
  CHECK(vec_diff(via_pairs, left) <= 1e-10);

  CHECK_THROWS_AS(operad_compose(b, b1, 1, {{b1, 1}, {b1, 1}, {b1, 1}}), std::out_of_range);
}

TEST_CASE("degenerate quotient is reported with its level") {
  // symmetrizing twist against antisymmetrizing relations kills the metric
  BOperator wrong = make_b_operator(2, -flip_matrix(2), 1.0);
  CHECK_THROWS_WITH_AS(build_fock(make_boson_twist(2), wrong, 3),
                       doctest::Contains("degenerate quotient at level 2"), std::runtime_error);
}

TEST_CASE("non-invariant ideals are rejected") {
  Matrix d = Matrix::Identity(4, 4);
  d(0, 0) = -1.0;  // relations generated by e_11
  BOperator leak = make_b_operator(2, d, 1.0);
  CHECK_THROWS_WITH_AS(build_fock(make_zero_twist(2), leak, 3),
                       doctest::Contains("ideal not Wick-invariant at level 2"),
                       std::runtime_error);
}

TEST_CASE("level accessors validate their arguments") {
  GradedFockSpace b = boson2(2);
  CHECK_THROWS_AS(creation_op(b, 1, 2), std::out_of_range);
  CHECK_THROWS_AS(creation_op(b, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(annihilate_twist_sum(b, 1, 0), std::out_of_range);
  CHECK_THROWS_AS(annihilate_twist_sum(b, 1, 3), std::out_of_range);
}
