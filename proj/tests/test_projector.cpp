#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fockforge/projector.hpp"

using namespace fockforge;

namespace {
double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::vector<double> sorted_eigs(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("R_2 of the boson flip") {
  Matrix expected(4, 4);
  expected << 2, 0, 0, 0,
              0, 1, 1, 0,
              0, 1, 1, 0,
              0, 0, 0, 2;
  CHECK(max_diff(build_R(make_boson_twist(2), 2).mat, expected) == 0.0);
}

TEST_CASE("P_2 of the fermion twist") {
  Matrix expected(4, 4);
  expected << 0, 0, 0, 0,
              0, 1, -1, 0,
              0, -1, 1, 0,
              0, 0, 0, 0;
  CHECK(max_diff(build_P(make_fermion_twist(2), 2).mat, expected) == 0.0);
}

TEST_CASE("scalar levels reproduce q-integers and q-factorials") {
  TwistOperator t = make_q_flip_twist(1, 0.5);
  // R_n = [n]_q = 1 + q + ... + q^{n-1}
  CHECK(std::abs(build_R(t, 3).mat(0, 0) - Complex(1.75, 0)) < 1e-15);
  // P_3 = [3]_q! = [1][2][3] = 1 * 1.5 * 1.75
  CHECK(std::abs(build_P(t, 3).mat(0, 0) - Complex(2.625, 0)) < 1e-15);
  CHECK(std::abs(build_P(t, 1).mat(0, 0) - Complex(1, 0)) < 1e-15);
}

TEST_CASE("zero twist gives identity projectors") {
  TwistOperator z = make_zero_twist(2);
  for (int n = 1; n <= 4; ++n) {
    CHECK(max_diff(build_P(z, n).mat, Matrix::Identity(1 << n, 1 << n)) == 0.0);
  }
}

TEST_CASE("quasi symmetrizer agrees with the recursion on the catalog") {
  std::vector<TwistOperator> twists;
  for (int n : {2, 3}) {
    twists.push_back(make_zero_twist(n));
    twists.push_back(make_boson_twist(n));
    twists.push_back(make_fermion_twist(n));
    twists.push_back(make_q_flip_twist(n, 0.5));
    twists.push_back(make_q_flip_twist(n, -0.9));
  }
  twists.push_back(make_epsilon_twist(lambda_epsilon_2()));
  for (const auto& t : twists) {
    for (int level = 1; level <= 4; ++level) {
      INFO(to_string(t.kind) << " N=" << t.ambient << " level " << level);
      CHECK(max_diff(build_P(t, level).mat, quasi_symmetrizer(t, level).mat) <= 1e-10);
    }
  }
}

TEST_CASE("gram data for the boson flip at level 2") {
  LevelGram g = gram(make_boson_twist(2), 2);
  auto eigs = sorted_eigs(g.gram);
  REQUIRE(eigs.size() == 4);
  CHECK(eigs[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eigs[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eigs[3] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(g.kernel.dim() == 1);
  CHECK(g.quotient.dim() == 3);
  CHECK(g.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.max_eigenvalue == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("gram spectrum for q = 0.9 at level 2") {
  LevelGram g = gram(make_q_flip_twist(2, 0.9), 2);
  auto eigs = sorted_eigs(g.gram);
  REQUIRE(eigs.size() == 4);
  // spectrum of id + 0.9 flip: 0.1 on the antisymmetric line, 1.9 three times
  CHECK(eigs[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(eigs[1] == doctest::Approx(1.9).epsilon(1e-12));
  CHECK(eigs[2] == doctest::Approx(1.9).epsilon(1e-12));
  CHECK(eigs[3] == doctest::Approx(1.9).epsilon(1e-12));
  CHECK(g.kernel.dim() == 0);
  CHECK(g.min_eigenvalue > 0.0);
}

TEST_CASE("level-0 gram is the unit") {
  LevelGram g = gram(make_fermion_twist(2), 0);
  CHECK(g.gram.rows() == 1);
  CHECK(g.gram(0, 0) == Complex(1, 0));
  CHECK(g.kernel.dim() == 0);
  CHECK(g.quotient.dim() == 1);
}

TEST_CASE("positivity across the strict-contraction family") {
  for (double q : {0.5, 0.9, -0.5, -0.9}) {
    for (int n : {2, 3}) {
      for (int level = 1; level <= 3; ++level) {
        LevelGram g = gram(make_q_flip_twist(n, q), level);
        INFO("q=" << q << " N=" << n << " level=" << level);
        CHECK(g.min_eigenvalue > 0.0);
        CHECK(g.kernel.dim() == 0);
      }
    }
  }
}

TEST_CASE("ideal tower dimensions") {
  // zero twist: no relations, full tensor levels
  IdealTower zt = ideal_tower(make_zero_twist(2), std::nullopt, 4);
  for (int n = 0; n <= 4; ++n) CHECK(zt.quotient_dim(n) == 1 << n);
  CHECK_FALSE(zt.from_b);

  // boson with B = flip: symmetric algebra dims 1, 2, 3, 4, 5
  BOperator bos = make_b_operator(2, flip_matrix(2), 1.0);
  IdealTower bt = ideal_tower(make_boson_twist(2), bos, 4);
  CHECK(bt.from_b);
  for (int n = 0; n <= 4; ++n) CHECK(bt.quotient_dim(n) == n + 1);
  REQUIRE(bt.b_kernel_residual.has_value());
  CHECK(*bt.b_kernel_residual <= 1e-10);

  // fermion with B = -flip: exterior algebra dims 1, 2, 1, 0, 0
  BOperator fer = make_b_operator(2, -flip_matrix(2), 1.0);
  IdealTower ft = ideal_tower(make_fermion_twist(2), fer, 4);
  const int expected_f[] = {1, 2, 1, 0, 0};
  for (int n = 0; n <= 4; ++n) CHECK(ft.quotient_dim(n) == expected_f[n]);

  // N = 3 variants
  IdealTower bt3 = ideal_tower(make_boson_twist(3), make_b_operator(3, flip_matrix(3), 1.0), 4);
  const int expected_b3[] = {1, 3, 6, 10, 15};
  for (int n = 0; n <= 4; ++n) CHECK(bt3.quotient_dim(n) == expected_b3[n]);
  IdealTower ft3 = ideal_tower(make_fermion_twist(3), make_b_operator(3, -flip_matrix(3), 1.0), 4);
  const int expected_f3[] = {1, 3, 3, 1, 0};
  for (int n = 0; n <= 4; ++n) CHECK(ft3.quotient_dim(n) == expected_f3[n]);

  // without B the generators come from ker P_2; boson flip gives the same tower
  IdealTower kt = ideal_tower(make_boson_twist(2), std::nullopt, 3);
  for (int n = 0; n <= 3; ++n) CHECK(kt.quotient_dim(n) == n + 1);
  CHECK_FALSE(kt.b_kernel_residual.has_value());
}

TEST_CASE("lambda twist tower matches the fermion dimensions") {
  IdealTower lt = ideal_tower(make_epsilon_twist(lambda_epsilon_2()), std::nullopt, 4);
  const int expected[] = {1, 2, 1, 0, 0};
  for (int n = 0; n <= 4; ++n) CHECK(lt.quotient_dim(n) == expected[n]);
}

TEST_CASE("braid representation accepts involutive twists") {
  Permutation swap01{1, 0, 2};
  LevelOperator bos = braid_representation(make_boson_twist(2), swap01);
  CHECK(max_diff(bos.mat, embed_at(make_boson_twist(2).t_tilde, 1, 3).mat) == 0.0);

  // representation property on S_3 for the fermion twist
  TwistOperator fer = make_fermion_twist(2);
  for (const auto& a : symmetric_group(3)) {
    for (const auto& b : symmetric_group(3)) {
      Matrix lhs = braid_representation(fer, compose(a, b)).mat;
      Matrix rhs = braid_representation(fer, a).mat * braid_representation(fer, b).mat;
      CHECK(max_diff(lhs, rhs) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(braid_representation(make_q_flip_twist(2, 0.5), swap01), std::domain_error);
  CHECK_THROWS_AS(braid_representation(make_zero_twist(2), swap01), std::domain_error);
  CHECK_THROWS_WITH_AS(braid_representation(make_q_flip_twist(2, 0.5), swap01),
                       doctest::Contains("not well-defined"), std::domain_error);
}
