#include "fockforge/fock.hpp"

#include <stdexcept>
#include <string>

namespace fockforge {

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// <e_i| (x) id^{(x)(level-1)} composed with R_level, on the full tensor level
Matrix full_annihilator(const TwistOperator& t, int i, int level) {
  const auto n = static_cast<Eigen::Index>(t.ambient);
  const auto rest = static_cast<Eigen::Index>(level_dim(t.ambient, level - 1));
  Matrix bra = Matrix::Zero(1, n);
  bra(0, i - 1) = 1.0;
  return kron(bra, Matrix::Identity(rest, rest)) * build_R(t, level).mat;
}

}  // namespace

int GradedFockSpace::dim(int level) const {
  if (level < 0 || level > n_max) throw std::out_of_range("level outside Fock range");
  return tower.quotient[static_cast<std::size_t>(level)].dim();
}

GradedFockSpace build_fock(const TwistOperator& t, std::optional<BOperator> b, int n_max,
                           double tol, double rank_tol) {
  if (n_max < 1) throw std::invalid_argument("build_fock requires n_max >= 1");

  GradedFockSpace f;
  f.ambient = t.ambient;
  f.n_max = n_max;
  f.twist = t;
  f.b_op = b;
  f.tower = ideal_tower(t, b, n_max, rank_tol);

  for (int level = 0; level <= n_max; ++level) {
    if (level == 0) {
      Matrix g(1, 1);
      g(0, 0) = 1.0;
      f.gram_full.push_back(g);
    } else {
      f.gram_full.push_back(build_P(t, level).mat);
    }
    const Matrix& q = f.tower.quotient[static_cast<std::size_t>(level)].vectors;
    f.gram_restricted.push_back(q.adjoint() * f.gram_full.back() * q);
  }

  // the deformed inner product must be degenerate only along the ideal
  for (int level = 0; level <= n_max; ++level) {
    const Matrix& g = f.gram_restricted[static_cast<std::size_t>(level)];
    if (g.rows() == 0) continue;
    Eigen::JacobiSVD<Matrix> svd(g);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= rank_tol * sv(0))
      throw std::runtime_error("degenerate quotient at level " + std::to_string(level));
  }

  // annihilation must map the ideal tower into itself
  for (int level = 2; level <= n_max; ++level) {
    const Matrix& ideal = f.tower.ideal[static_cast<std::size_t>(level)].vectors;
    if (ideal.cols() == 0) continue;
    const Matrix& prev = f.tower.ideal[static_cast<std::size_t>(level - 1)].vectors;
    for (int i = 1; i <= f.ambient; ++i) {
      const Matrix image = full_annihilator(t, i, level) * ideal;
      const Matrix leak = prev.cols() > 0 ? (image - prev * (prev.adjoint() * image)).eval() : image;
      if (max_abs(leak) > tol)
        throw std::runtime_error("ideal not Wick-invariant at level " + std::to_string(level));
    }
  }

  for (int level = 0; level < n_max; ++level) {
    const Matrix& q_lo = f.tower.quotient[static_cast<std::size_t>(level)].vectors;
    const Matrix& q_hi = f.tower.quotient[static_cast<std::size_t>(level + 1)].vectors;
    std::vector<Matrix> row;
    for (int i = 1; i <= f.ambient; ++i) {
      Matrix e = Matrix::Zero(f.ambient, 1);
      e(i - 1, 0) = 1.0;
      row.push_back(q_hi.adjoint() * kron(e, q_lo));
    }
    f.create.push_back(std::move(row));
  }

  f.annihilate.emplace_back();  // no annihilation below the vacuum
  for (int level = 1; level <= n_max; ++level) {
    const Matrix& q_lo = f.tower.quotient[static_cast<std::size_t>(level - 1)].vectors;
    const Matrix& q_hi = f.tower.quotient[static_cast<std::size_t>(level)].vectors;
    std::vector<Matrix> row;
    for (int i = 1; i <= f.ambient; ++i)
      row.push_back(q_lo.adjoint() * full_annihilator(t, i, level) * q_hi);
    f.annihilate.push_back(std::move(row));
  }

  f.build_checks.push_back(check_yang_baxter(t, tol));
  double psd_res = 0.0;
  double quotient_res = 0.0;
  for (int level = 1; level <= n_max; ++level) {
    const Matrix& g = f.gram_full[static_cast<std::size_t>(level)];
    const Matrix herm = (g + g.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    psd_res = std::max(psd_res, std::max(0.0, -es.eigenvalues().minCoeff()));
    const Matrix& gr = f.gram_restricted[static_cast<std::size_t>(level)];
    if (gr.rows() > 0) {
      const Matrix herm_r = (gr + gr.adjoint()) / 2.0;
      Eigen::SelfAdjointEigenSolver<Matrix> es_r(herm_r, Eigen::EigenvaluesOnly);
      quotient_res = std::max(quotient_res, std::max(0.0, -es_r.eigenvalues().minCoeff()));
    }
  }
  f.build_checks.push_back(make_check("gram_positive_semidefinite", psd_res, tol));
  f.build_checks.push_back(make_check("quotient_gram_positive", quotient_res, tol));
  f.build_checks.push_back(verify_adjointness(f, tol));
  f.build_checks.push_back(verify_ccr(f, tol));
  f.well_defined = true;
  for (const auto& c : f.build_checks) f.well_defined = f.well_defined && c.pass;
  return f;
}

const Matrix& creation_op(const GradedFockSpace& f, int i, int level) {
  if (i < 1 || i > f.ambient) throw std::out_of_range("generator index out of range");
  if (level < 0 || level >= f.n_max) throw std::out_of_range("creation level out of range");
  return f.create[static_cast<std::size_t>(level)][static_cast<std::size_t>(i - 1)];
}

const Matrix& annihilate_twist_sum(const GradedFockSpace& f, int i, int level) {
  if (i < 1 || i > f.ambient) throw std::out_of_range("generator index out of range");
  if (level < 1 || level > f.n_max) throw std::out_of_range("annihilation level out of range");
  return f.annihilate[static_cast<std::size_t>(level)][static_cast<std::size_t>(i - 1)];
}

Matrix annihilate_adjoint(const GradedFockSpace& f, int i, int level) {
  const Matrix& c = creation_op(f, i, level - 1);
  const Matrix& g_lo = f.gram_restricted[static_cast<std::size_t>(level - 1)];
  const Matrix& g_hi = f.gram_restricted[static_cast<std::size_t>(level)];
  if (g_lo.rows() == 0 || g_hi.rows() == 0)
    return Matrix(g_lo.rows(), g_hi.rows());
  Eigen::FullPivLU<Matrix> lu(g_lo);
  if (!lu.isInvertible())
    throw std::runtime_error("degenerate quotient at level " + std::to_string(level - 1));
  return lu.solve(c.adjoint() * g_hi);
}

CheckResult verify_ccr(const GradedFockSpace& f, double tol) {
  double worst = 0.0;
  std::string witness;
  for (int level = 0; level < f.n_max; ++level) {
    const auto d = static_cast<Eigen::Index>(f.dim(level));
    for (int i = 1; i <= f.ambient; ++i)
      for (int j = 1; j <= f.ambient; ++j) {
        Matrix d_ij = f.annihilate[static_cast<std::size_t>(level + 1)][static_cast<std::size_t>(i - 1)] *
                      f.create[static_cast<std::size_t>(level)][static_cast<std::size_t>(j - 1)];
        if (level >= 1) {
          for (int k = 1; k <= f.ambient; ++k)
            for (int l = 1; l <= f.ambient; ++l) {
              const Complex coeff = twist_entry(f.twist, j, l, i, k);  // C^{ij}_{kl} = T^{jl}_{ik}
              if (coeff != Complex(0.0, 0.0))
                d_ij -= coeff *
                        (f.create[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(k - 1)] *
                         f.annihilate[static_cast<std::size_t>(level)][static_cast<std::size_t>(l - 1)]);
            }
        }
        if (i == j) d_ij -= Matrix::Identity(d, d);
        const double res = max_abs(d_ij);
        if (res > worst) {
          worst = res;
          witness = "level " + std::to_string(level) + ", pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
        }
      }
  }
  CheckResult c = make_check("deformed_commutation_relations", worst, tol);
  if (!c.pass) c.witness = witness;
  return c;
}

CheckResult verify_adjointness(const GradedFockSpace& f, double tol) {
  double worst = 0.0;
  std::string witness;
  for (int level = 0; level < f.n_max; ++level)
    for (int i = 1; i <= f.ambient; ++i) {
      const Matrix& c = f.create[static_cast<std::size_t>(level)][static_cast<std::size_t>(i - 1)];
      const Matrix& a = f.annihilate[static_cast<std::size_t>(level + 1)][static_cast<std::size_t>(i - 1)];
      const Matrix diff = c.adjoint() * f.gram_restricted[static_cast<std::size_t>(level + 1)] -
                          f.gram_restricted[static_cast<std::size_t>(level)] * a;
      const double res = max_abs(diff);
      if (res > worst) {
        worst = res;
        witness = "level " + std::to_string(level) + ", generator " + std::to_string(i);
      }
    }
  CheckResult c = make_check("creation_annihilation_adjoint", worst, tol);
  if (!c.pass) c.witness = witness;
  return c;
}

Vector state_word(const GradedFockSpace& f, const MultiIndex& word) {
  if (word.ambient != f.ambient) throw std::invalid_argument("word ambient dimension mismatch");
  const int level = word.level();
  if (level > f.n_max) throw std::out_of_range("word longer than n_max");
  const Matrix& q = f.tower.quotient[static_cast<std::size_t>(level)].vectors;
  Vector e = Vector::Zero(static_cast<Eigen::Index>(level_dim(f.ambient, level)));
  e(static_cast<Eigen::Index>(word.position())) = 1.0;
  return q.adjoint() * e;
}

Vector quotient_product(const GradedFockSpace& f, const Vector& a, int level_a, const Vector& b,
                        int level_b) {
  if (level_a < 0 || level_b < 0 || level_a + level_b > f.n_max)
    throw std::out_of_range("product level outside Fock range");
  if (a.size() != f.dim(level_a) || b.size() != f.dim(level_b))
    throw std::invalid_argument("operand coordinate size mismatch");
  const Vector lift_a = f.tower.quotient[static_cast<std::size_t>(level_a)].vectors * a;
  const Vector lift_b = f.tower.quotient[static_cast<std::size_t>(level_b)].vectors * b;
  const Matrix prod = kron(Matrix(lift_a), Matrix(lift_b));
  return f.tower.quotient[static_cast<std::size_t>(level_a + level_b)].vectors.adjoint() *
         Vector(prod.col(0));
}

Vector operad_compose(const GradedFockSpace& f, const Vector& u, int level_u,
                      const std::vector<std::pair<Vector, int>>& args) {
  Vector acc = u;
  int level = level_u;
  for (const auto& [v, lv] : args) {
    acc = quotient_product(f, acc, level, v, lv);
    level += lv;
  }
  return acc;
}

}  // namespace fockforge
