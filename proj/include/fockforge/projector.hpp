#pragma once

// Level operators R_n and P_n generated by a twist, the induced Gram data,
// the two-sided ideal tower generated by quadratic relations, and braid-group
// representations for involutive twists.
//
// R_1 = id and R_n = id + T^(1) + T^(1)T^(2) + ... + T^(1)...T^(n-1);
// P_1 = id and P_{n+1} = (id (x) P_n) R_{n+1}. For a twist satisfying the
// Yang-Baxter equation P_n equals the sum of T_pi over all permutations pi,
// where T_pi multiplies embedded factors along any reduced word of pi; that
// sum is exposed separately as an independent cross-check.

#include <optional>
#include <vector>

#include "fockforge/report.hpp"
#include "fockforge/tensor_core.hpp"
#include "fockforge/twist.hpp"

namespace fockforge {

LevelOperator build_R(const TwistOperator& t, int level);
LevelOperator build_P(const TwistOperator& t, int level);

// sum over all pi in S_n of embedded twist products along reduced words
LevelOperator quasi_symmetrizer(const TwistOperator& t, int level);

struct LevelGram {
  int level = 0;
  Matrix gram;               // matrix of P_n; G_0 = [1]
  double min_eigenvalue = 0.0;  // of the Hermitian part
  double max_eigenvalue = 0.0;
  SubspaceBasis kernel;
  SubspaceBasis quotient;
};

LevelGram gram(const TwistOperator& t, int level, double tol = kDefaultRankTol);

struct IdealTower {
  int ambient = 0;
  int n_max = 0;
  bool from_b = false;                     // generators im(id - B) instead of ker P_2
  std::vector<SubspaceBasis> ideal;        // levels 0..n_max
  std::vector<SubspaceBasis> quotient;     // orthonormal complements
  std::optional<double> b_kernel_residual; // distance of im(id - B) from ker P_2

  int quotient_dim(int level) const;
};

// level n of the two-sided ideal generated by the quadratic subspace I_2:
// the span of x^i (x) v, v (x) x^i over level n-1 ideal vectors v together
// with I_2 embedded at every adjacent slot pair, rank-reduced
IdealTower ideal_tower(const TwistOperator& t, const std::optional<BOperator>& b, int n_max,
                       double tol = kDefaultRankTol);

// product of embedded twists along a reduced word of pi; requires the
// Yang-Baxter equation and T^2 = id within tol
LevelOperator braid_representation(const TwistOperator& t, const Permutation& pi,
                                   double tol = kDefaultCheckTol);

}  // namespace fockforge
