#pragma once

// Graded Fock-type quotients of the tensor algebra: level quotient bases,
// restricted Gram matrices, creation and annihilation operators, the deformed
// commutation relations they satisfy, and the grafting composition on
// composite states.
//
// Creation tensors on the left and projects, a_i^+ = Pi(x^i (x) -).
// Annihilation pairs the first slot after applying R_n,
// a_{*i} = (<x^{*i}| (x) id^{(x)(n-1)}) R_n, lifted through orthogonal
// representatives; an alternative route solves the Gram adjoint equation
// G_{n-1} A = (a_i^+)^H G_n. Both routes agree on well-defined spaces.

#include <optional>
#include <utility>
#include <vector>

#include "fockforge/projector.hpp"
#include "fockforge/report.hpp"
#include "fockforge/tensor_core.hpp"
#include "fockforge/twist.hpp"

namespace fockforge {

struct GradedFockSpace {
  int ambient = 0;
  int n_max = 0;
  TwistOperator twist;
  std::optional<BOperator> b_op;
  IdealTower tower;
  std::vector<Matrix> gram_full;        // levels 0..n_max, matrix of P_n
  std::vector<Matrix> gram_restricted;  // Q^H P Q on the quotient bases
  // create[n][i-1]: level n -> n+1 for n in 0..n_max-1
  std::vector<std::vector<Matrix>> create;
  // annihilate[n][i-1]: level n -> n-1 for n in 1..n_max; annihilate[0] empty
  std::vector<std::vector<Matrix>> annihilate;
  std::vector<CheckResult> build_checks;
  bool well_defined = false;

  int dim(int level) const;
};

// throws "degenerate quotient at level n" when a restricted Gram is singular
// at tolerance, and "ideal not Wick-invariant at level n" when annihilation
// leaks out of the ideal tower
GradedFockSpace build_fock(const TwistOperator& t, std::optional<BOperator> b, int n_max,
                           double tol = kDefaultCheckTol, double rank_tol = kDefaultRankTol);

const Matrix& creation_op(const GradedFockSpace& f, int i, int level);
const Matrix& annihilate_twist_sum(const GradedFockSpace& f, int i, int level);

// solves the Gram adjoint equation at the given level
Matrix annihilate_adjoint(const GradedFockSpace& f, int i, int level);

// worst deviation of a_{*i} a_j^+ - sum_{kl} C^{ij}_{kl} a_k^+ a_{*l} -
// delta^{ij} id over levels 0..n_max-1, with C^{ij}_{kl} = T^{jl}_{ik}
CheckResult verify_ccr(const GradedFockSpace& f, double tol = kDefaultCheckTol);

// worst deviation of (a_i^+)^H G_{n+1} = G_n a_{*i} over creation levels
CheckResult verify_adjointness(const GradedFockSpace& f, double tol = kDefaultCheckTol);

// quotient coordinates of the projected standard basis vector of a word
Vector state_word(const GradedFockSpace& f, const MultiIndex& word);

// Pi(lift(a) (x) lift(b))
Vector quotient_product(const GradedFockSpace& f, const Vector& a, int level_a, const Vector& b,
                        int level_b);

// grafting: gamma(u; v_1, ..., v_l) multiplies the composer by its arguments
// left to right in the quotient algebra
Vector operad_compose(const GradedFockSpace& f, const Vector& u, int level_u,
                      const std::vector<std::pair<Vector, int>>& args);

}  // namespace fockforge
