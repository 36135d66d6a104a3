#include "fockforge/projector.hpp"

#include <stdexcept>
#include <string>

namespace fockforge {

LevelOperator build_R(const TwistOperator& t, int level) {
  if (level < 1) throw std::invalid_argument("build_R requires level >= 1");
  const auto dim = static_cast<Eigen::Index>(level_dim(t.ambient, level));
  Matrix acc = Matrix::Identity(dim, dim);
  Matrix term = Matrix::Identity(dim, dim);
  for (int k = 1; k <= level - 1; ++k) {
    term = term * embed_at(t.t_tilde, k, level).mat;
    acc += term;
  }
  return LevelOperator(t.ambient, level, std::move(acc));
}

LevelOperator build_P(const TwistOperator& t, int level) {
  if (level < 1) throw std::invalid_argument("build_P requires level >= 1");
  const auto n = static_cast<Eigen::Index>(t.ambient);
  Matrix p = Matrix::Identity(n, n);
  for (int m = 2; m <= level; ++m)
    p = kron(Matrix::Identity(n, n), p) * build_R(t, m).mat;
  return LevelOperator(t.ambient, level, std::move(p));
}

LevelOperator quasi_symmetrizer(const TwistOperator& t, int level) {
  if (level < 1) throw std::invalid_argument("quasi_symmetrizer requires level >= 1");
  const auto dim = static_cast<Eigen::Index>(level_dim(t.ambient, level));
  Matrix acc = Matrix::Zero(dim, dim);
  for (const auto& pi : symmetric_group(level)) {
    Matrix m = Matrix::Identity(dim, dim);
    for (int slot : reduced_word(pi)) m = m * embed_at(t.t_tilde, slot, level).mat;
    acc += m;
  }
  return LevelOperator(t.ambient, level, std::move(acc));
}

LevelGram gram(const TwistOperator& t, int level, double tol) {
  if (level < 0) throw std::invalid_argument("gram requires level >= 0");
  if (level == 0) {
    Matrix g(1, 1);
    g(0, 0) = 1.0;  // the vacuum is declared to have unit norm
    return LevelGram{0, g, 1.0, 1.0, SubspaceBasis(t.ambient, 0, Matrix(1, 0)),
                     SubspaceBasis(t.ambient, 0, Matrix::Identity(1, 1))};
  }
  LevelOperator p = build_P(t, level);
  const Matrix herm = (p.mat + p.mat.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  KernelSplit split = kernel_basis(p, tol);
  return LevelGram{level,
                   p.mat,
                   es.eigenvalues().minCoeff(),
                   es.eigenvalues().maxCoeff(),
                   std::move(split.kernel),
                   std::move(split.complement)};
}

int IdealTower::quotient_dim(int level) const {
  if (level < 0 || level > n_max) throw std::out_of_range("level outside tower range");
  return quotient[static_cast<std::size_t>(level)].dim();
}

IdealTower ideal_tower(const TwistOperator& t, const std::optional<BOperator>& b, int n_max,
                       double tol) {
  if (n_max < 0) throw std::invalid_argument("ideal_tower requires n_max >= 0");
  if (b && b->ambient != t.ambient)
    throw std::invalid_argument("twist and b operator dimension mismatch");
  const int n_amb = t.ambient;

  IdealTower tower;
  tower.ambient = n_amb;
  tower.n_max = n_max;
  tower.from_b = b.has_value();

  const auto dim2 = static_cast<Eigen::Index>(level_dim(n_amb, 2));
  Matrix generators(dim2, 0);
  if (b) {
    generators = Matrix::Identity(dim2, dim2) - b->matrix.mat;
  } else if (n_max >= 2) {
    generators = kernel_basis(build_P(t, 2), tol).kernel.vectors;
  }
  KernelSplit quad = column_space_split(n_amb, 2, generators, tol);
  const Matrix i2 = quad.kernel.vectors;  // orthonormal span of the quadratic relations

  if (b && n_max >= 2) {
    // distance of the span of im(id - B) from ker P_2
    const Matrix k2 = kernel_basis(build_P(t, 2), tol).kernel.vectors;
    double worst = 0.0;
    for (Eigen::Index c = 0; c < i2.cols(); ++c) {
      const Vector v = i2.col(c);
      const Vector res = v - k2 * (k2.adjoint() * v);
      worst = std::max(worst, res.norm());
    }
    tower.b_kernel_residual = worst;
  }

  for (int level = 0; level <= n_max; ++level) {
    const auto dim = static_cast<Eigen::Index>(level_dim(n_amb, level));
    if (level < 2) {
      tower.ideal.emplace_back(n_amb, level, Matrix(dim, 0));
      tower.quotient.emplace_back(n_amb, level, Matrix::Identity(dim, dim));
      continue;
    }
    if (level == 2) {
      tower.ideal.push_back(quad.kernel);
      tower.quotient.push_back(i2.cols() == 0
                                   ? SubspaceBasis(n_amb, 2, Matrix::Identity(dim, dim))
                                   : quad.complement);
      continue;
    }
    const Matrix& prev = tower.ideal.back().vectors;
    const auto id_n = Matrix::Identity(n_amb, n_amb);
    std::vector<Matrix> candidates;
    if (prev.cols() > 0) {
      candidates.push_back(kron(id_n, prev));
      candidates.push_back(kron(prev, id_n));
    }
    if (i2.cols() > 0) {
      for (int slot = 1; slot <= level - 1; ++slot) {
        const auto left = static_cast<Eigen::Index>(level_dim(n_amb, slot - 1));
        const auto right = static_cast<Eigen::Index>(level_dim(n_amb, level - slot - 1));
        candidates.push_back(
            kron(Matrix::Identity(left, left), kron(i2, Matrix::Identity(right, right))));
      }
    }
    Eigen::Index total = 0;
    for (const auto& c : candidates) total += c.cols();
    Matrix stacked(dim, total);
    Eigen::Index at = 0;
    for (const auto& c : candidates) {
      stacked.middleCols(at, c.cols()) = c;
      at += c.cols();
    }
    KernelSplit split = column_space_split(n_amb, level, stacked, tol);
    if (split.kernel.dim() == 0)
      split.complement = SubspaceBasis(n_amb, level, Matrix::Identity(dim, dim));
    tower.ideal.push_back(std::move(split.kernel));
    tower.quotient.push_back(std::move(split.complement));
  }
  return tower;
}

LevelOperator braid_representation(const TwistOperator& t, const Permutation& pi, double tol) {
  if (!is_permutation(pi)) throw std::invalid_argument("not a permutation");
  const CheckResult ybe = check_yang_baxter(t, tol);
  const Matrix& m2 = t.t_tilde.mat;
  const double invol = (m2 * m2 - Matrix::Identity(m2.rows(), m2.cols())).cwiseAbs().maxCoeff();
  if (!ybe.pass || invol > tol)
    throw std::domain_error("representation not well-defined: requires Yang-Baxter and T^2 = id");
  const int level = static_cast<int>(pi.size());
  if (level < 1) throw std::invalid_argument("braid representation needs level >= 1");
  const auto dim = static_cast<Eigen::Index>(level_dim(t.ambient, level));
  Matrix m = Matrix::Identity(dim, dim);
  for (int slot : reduced_word(pi)) m = m * embed_at(t.t_tilde, slot, level).mat;
  return LevelOperator(t.ambient, level, std::move(m));
}

}  // namespace fockforge
