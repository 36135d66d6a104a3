#pragma once

// Catalog of twist operators T on E (x) E, written against the convention
// T(x^i (x) x^j) = sum_{kl} T^{ij}_{kl} x^k (x) x^l, together with the
// algebraic checks that qualify a twist for Fock-space constructions:
// Yang-Baxter, norm bound, hermiticity, the Hecke condition and the
// consistency conditions tying a twist to a b-operator.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fockforge/report.hpp"
#include "fockforge/tensor_core.hpp"

namespace fockforge {

enum class TwistKind { zero, boson, fermion, q_flip, epsilon_diag, custom };

std::string to_string(TwistKind kind);

// diagonal coefficient family eps^{ij} with eps^{ij} eps^{ji} = 1, optionally
// generated as eps^{ij} = -(-1)^{Sigma_ij} q^{Omega_ij} from a symmetric
// integer matrix Sigma and an antisymmetric integer matrix Omega
struct EpsilonSpec {
  int ambient = 0;
  Matrix eps;

  static EpsilonSpec from_eps(Matrix eps);
  static EpsilonSpec from_exponents(const Eigen::MatrixXi& sigma, const Eigen::MatrixXi& omega,
                                    Complex q);
};

// eps for the two-generator algebra with commuting generators of square zero:
// eps^{ii} = -1, eps^{12} = eps^{21} = 1
EpsilonSpec lambda_epsilon_2();

struct TwistOperator {
  TwistKind kind = TwistKind::custom;
  int ambient = 0;
  LevelOperator t_tilde;  // level 2
  std::optional<Complex> q;
  std::optional<EpsilonSpec> epsilon;
};

Matrix flip_matrix(int ambient);

TwistOperator make_zero_twist(int ambient);
TwistOperator make_boson_twist(int ambient);
TwistOperator make_fermion_twist(int ambient);
TwistOperator make_q_flip_twist(int ambient, Complex q);
TwistOperator make_epsilon_twist(EpsilonSpec spec);
TwistOperator make_custom_twist(int ambient, Matrix t_tilde);

// coefficient T^{ij}_{kl} (all indices 1-based)
Complex twist_entry(const TwistOperator& t, int i, int j, int k, int l);

// invertible level-2 operator defining quadratic Wick relations via im(id - B)
struct BOperator {
  int ambient = 0;
  LevelOperator matrix;
  std::optional<Complex> mu;
};

BOperator make_b_operator(int ambient, Matrix b, std::optional<Complex> mu = std::nullopt,
                          double tol = kDefaultRankTol);

// ||T1 T2 T1 - T2 T1 T2||_max on E^{(x)3}
CheckResult check_yang_baxter(const TwistOperator& t, double tol = kDefaultCheckTol);

// operator norm vs 1; tolerance pinned to 1e-12
CheckResult check_norm_bound(const TwistOperator& t);

CheckResult check_hermitian(const TwistOperator& t, double tol = kDefaultCheckTol);

// ||(T - mu id)(T + id)||_max; mu must be nonzero
CheckResult check_hecke(const TwistOperator& t, Complex mu, double tol = kDefaultCheckTol);

// (i)  B1 B2 B1 = B2 B1 B2
// (ii) B1 T2 T1 = T2 T1 B2
// (iii) (id + T)(id - B) = 0
std::vector<CheckResult> check_cd_conditions(const TwistOperator& t, const BOperator& b,
                                             double tol = kDefaultCheckTol);

// for the two-generator spec above: quotient relations x1.x2 = x2.x1 and
// (x^i)^2 = 0, the Clifford pair e^i e^j + e^j e^i = 2 delta^{ij}, the
// anticommuting embedding Theta^i = x^i (x) e^i, and the componentwise pair
// representation x1 = (theta, 1), x2 = (1, theta) whose product is
// (theta, theta)
std::vector<CheckResult> check_clifford_embedding(const EpsilonSpec& spec,
                                                  double tol = 1e-14);

}  // namespace fockforge
