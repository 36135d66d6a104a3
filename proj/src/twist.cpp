#include "fockforge/twist.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fockforge {

namespace {

std::size_t pair_pos(int ambient, int a, int b) {
  return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(ambient) +
         static_cast<std::size_t>(b - 1);
}

Complex int_pow(Complex base, int e) {
  if (e == 0) return Complex(1.0, 0.0);
  if (e < 0) {
    if (base == Complex(0.0, 0.0)) throw std::invalid_argument("negative power of zero q");
    return Complex(1.0, 0.0) / int_pow(base, -e);
  }
  Complex acc(1.0, 0.0);
  for (int k = 0; k < e; ++k) acc *= base;
  return acc;
}

std::string word_text(const MultiIndex& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.letters[k]);
  }
  return s + ")";
}

std::string max_entry_witness(const Matrix& diff, int ambient, int level) {
  Eigen::Index row = 0, col = 0;
  diff.cwiseAbs().maxCoeff(&row, &col);
  const auto in = MultiIndex::from_position(ambient, level, static_cast<std::size_t>(col));
  const auto out = MultiIndex::from_position(ambient, level, static_cast<std::size_t>(row));
  return "basis column " + word_text(in) + ", row " + word_text(out);
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

std::string to_string(TwistKind kind) {
  switch (kind) {
    case TwistKind::zero: return "zero";
    case TwistKind::boson: return "boson";
    case TwistKind::fermion: return "fermion";
    case TwistKind::q_flip: return "q_flip";
    case TwistKind::epsilon_diag: return "epsilon_diag";
    case TwistKind::custom: return "custom";
  }
  throw std::logic_error("unknown twist kind");
}

EpsilonSpec EpsilonSpec::from_eps(Matrix eps) {
  if (eps.rows() != eps.cols() || eps.rows() < 1)
    throw std::invalid_argument("epsilon matrix must be square");
  const int n = static_cast<int>(eps.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(eps(i, j) * eps(j, i) - Complex(1.0, 0.0)) > 1e-12)
        throw std::invalid_argument("epsilon must satisfy eps_ij * eps_ji = 1");
  EpsilonSpec spec;
  spec.ambient = n;
  spec.eps = std::move(eps);
  return spec;
}

EpsilonSpec EpsilonSpec::from_exponents(const Eigen::MatrixXi& sigma, const Eigen::MatrixXi& omega,
                                        Complex q) {
  if (sigma.rows() != sigma.cols() || omega.rows() != omega.cols() ||
      sigma.rows() != omega.rows() || sigma.rows() < 1)
    throw std::invalid_argument("sigma and omega must be square of equal dimension");
  if (sigma != sigma.transpose().eval())
    throw std::invalid_argument("sigma must be symmetric");
  if (omega != (-omega.transpose()).eval())
    throw std::invalid_argument("omega must be antisymmetric");
  const int n = static_cast<int>(sigma.rows());
  Matrix eps(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double sign_part = sigma(i, j) % 2 == 0 ? 1.0 : -1.0;
      eps(i, j) = -sign_part * int_pow(q, omega(i, j));
    }
  return from_eps(std::move(eps));
}

EpsilonSpec lambda_epsilon_2() {
  Matrix eps(2, 2);
  eps << -1.0, 1.0, 1.0, -1.0;
  return EpsilonSpec::from_eps(std::move(eps));
}

Matrix flip_matrix(int ambient) {
  const auto dim = static_cast<Eigen::Index>(level_dim(ambient, 2));
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 1; i <= ambient; ++i)
    for (int j = 1; j <= ambient; ++j)
      m(static_cast<Eigen::Index>(pair_pos(ambient, j, i)),
        static_cast<Eigen::Index>(pair_pos(ambient, i, j))) = 1.0;
  return m;
}

TwistOperator make_zero_twist(int ambient) {
  const auto dim = static_cast<Eigen::Index>(level_dim(ambient, 2));
  return TwistOperator{TwistKind::zero, ambient, LevelOperator(ambient, 2, Matrix::Zero(dim, dim)),
                       std::nullopt, std::nullopt};
}

TwistOperator make_boson_twist(int ambient) {
  return TwistOperator{TwistKind::boson, ambient, LevelOperator(ambient, 2, flip_matrix(ambient)),
                       std::nullopt, std::nullopt};
}

TwistOperator make_fermion_twist(int ambient) {
  return TwistOperator{TwistKind::fermion, ambient,
                       LevelOperator(ambient, 2, -flip_matrix(ambient)), std::nullopt,
                       std::nullopt};
}

TwistOperator make_q_flip_twist(int ambient, Complex q) {
  return TwistOperator{TwistKind::q_flip, ambient,
                       LevelOperator(ambient, 2, q * flip_matrix(ambient)), q, std::nullopt};
}

TwistOperator make_epsilon_twist(EpsilonSpec spec) {
  const int n = spec.ambient;
  const auto dim = static_cast<Eigen::Index>(level_dim(n, 2));
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m(static_cast<Eigen::Index>(pair_pos(n, j, i)),
        static_cast<Eigen::Index>(pair_pos(n, i, j))) = spec.eps(i - 1, j - 1);
  return TwistOperator{TwistKind::epsilon_diag, n, LevelOperator(n, 2, std::move(m)),
                       std::nullopt, std::move(spec)};
}

TwistOperator make_custom_twist(int ambient, Matrix t_tilde) {
  return TwistOperator{TwistKind::custom, ambient,
                       LevelOperator(ambient, 2, std::move(t_tilde)), std::nullopt, std::nullopt};
}

Complex twist_entry(const TwistOperator& t, int i, int j, int k, int l) {
  const int n = t.ambient;
  for (int v : {i, j, k, l})
    if (v < 1 || v > n) throw std::out_of_range("twist entry index out of range");
  return t.t_tilde.mat(static_cast<Eigen::Index>(pair_pos(n, k, l)),
                       static_cast<Eigen::Index>(pair_pos(n, i, j)));
}

BOperator make_b_operator(int ambient, Matrix b, std::optional<Complex> mu, double tol) {
  LevelOperator op(ambient, 2, std::move(b));
  Eigen::JacobiSVD<Matrix> svd(op.mat);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= tol * sv(0))
    throw std::invalid_argument("b operator must be invertible");
  return BOperator{ambient, std::move(op), mu};
}

CheckResult check_yang_baxter(const TwistOperator& t, double tol) {
  const LevelOperator t1 = embed_at(t.t_tilde, 1, 3);
  const LevelOperator t2 = embed_at(t.t_tilde, 2, 3);
  const Matrix diff = t1.mat * t2.mat * t1.mat - t2.mat * t1.mat * t2.mat;
  const double residual = max_abs(diff);
  CheckResult c = make_check("yang_baxter", residual, tol);
  if (!c.pass) c.witness = max_entry_witness(diff, t.ambient, 3);
  return c;
}

CheckResult check_norm_bound(const TwistOperator& t) {
  Eigen::JacobiSVD<Matrix> svd(t.t_tilde.mat);
  const double norm = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  CheckResult c = make_check("norm_bound", std::max(0.0, norm - 1.0), 1e-12);
  if (!c.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "operator norm %.17g exceeds 1", norm);
    c.witness = buf;
  }
  return c;
}

CheckResult check_hermitian(const TwistOperator& t, double tol) {
  const Matrix diff = t.t_tilde.mat - t.t_tilde.mat.adjoint();
  return make_check("hermitian", max_abs(diff), tol);
}

CheckResult check_hecke(const TwistOperator& t, Complex mu, double tol) {
  if (mu == Complex(0.0, 0.0)) throw std::invalid_argument("hecke parameter mu must be nonzero");
  const Matrix& m = t.t_tilde.mat;
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  const Matrix diff = (m - mu * id) * (m + id);
  CheckResult c = make_check("hecke", max_abs(diff), tol);
  if (!c.pass) c.witness = max_entry_witness(diff, t.ambient, 2);
  return c;
}

std::vector<CheckResult> check_cd_conditions(const TwistOperator& t, const BOperator& b,
                                             double tol) {
  if (t.ambient != b.ambient) throw std::invalid_argument("twist and b operator dimension mismatch");
  const Matrix t1 = embed_at(t.t_tilde, 1, 3).mat;
  const Matrix t2 = embed_at(t.t_tilde, 2, 3).mat;
  const Matrix b1 = embed_at(b.matrix, 1, 3).mat;
  const Matrix b2 = embed_at(b.matrix, 2, 3).mat;
  const Matrix id2 = Matrix::Identity(t.t_tilde.mat.rows(), t.t_tilde.mat.cols());

  std::vector<CheckResult> out;
  const Matrix d1 = b1 * b2 * b1 - b2 * b1 * b2;
  CheckResult c1 = make_check("cd_braid", max_abs(d1), tol);
  if (!c1.pass) c1.witness = max_entry_witness(d1, t.ambient, 3);
  out.push_back(std::move(c1));

  const Matrix d2 = b1 * t2 * t1 - t2 * t1 * b2;
  CheckResult c2 = make_check("cd_mixed_braid", max_abs(d2), tol);
  if (!c2.pass) c2.witness = max_entry_witness(d2, t.ambient, 3);
  out.push_back(std::move(c2));

  const Matrix d3 = (id2 + t.t_tilde.mat) * (id2 - b.matrix.mat);
  CheckResult c3 = make_check("cd_wick", max_abs(d3), tol);
  if (!c3.pass) c3.witness = max_entry_witness(d3, t.ambient, 2);
  out.push_back(std::move(c3));
  return out;
}

std::vector<CheckResult> check_clifford_embedding(const EpsilonSpec& spec, double tol) {
  if (spec.ambient != 2) throw std::invalid_argument("clifford embedding requires two generators");
  Matrix expected(2, 2);
  expected << -1.0, 1.0, 1.0, -1.0;
  if (max_abs(spec.eps - expected) > 1e-12)
    throw std::invalid_argument("clifford embedding requires eps^{ii} = -1, eps^{12} = eps^{21} = 1");

  std::vector<CheckResult> out;

  // level-2 quotient of the quadratic algebra: im(id - S) is spanned by
  // e_11, e_22 and e_12 - e_21, so the quotient line is (e_12 + e_21)/sqrt(2)
  const double c = 1.0 / std::sqrt(2.0);
  Vector u = Vector::Zero(4);
  u(1) = c;
  u(2) = c;
  auto project = [&u](int a, int b) {  // coordinate of x^a . x^b on the quotient line
    Vector e = Vector::Zero(4);
    e(static_cast<Eigen::Index>((a - 1) * 2 + (b - 1))) = 1.0;
    return (u.adjoint() * e)(0, 0);
  };

  out.push_back(make_check("quotient_commutation", std::abs(project(1, 2) - project(2, 1)), tol));
  out.push_back(make_check("quotient_squares",
                           std::max(std::abs(project(1, 1)), std::abs(project(2, 2))), tol));

  Matrix e1(2, 2), e2(2, 2);
  e1 << 0.0, 1.0, 1.0, 0.0;
  e2 << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  const Matrix id = Matrix::Identity(2, 2);
  const std::array<Matrix, 2> e = {e1, e2};
  double clifford_res = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double delta = i == j ? 2.0 : 0.0;
      clifford_res = std::max(clifford_res, max_abs(e[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j)] +
                                                    e[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(i)] -
                                                    delta * id));
    }
  out.push_back(make_check("clifford_relations", clifford_res, tol));

  // Theta^i = x^i (x) e^i; a degree-2 product lives on (quotient line) (x) M_2
  auto theta_product = [&](int a, int b) {
    return (project(a, b) * (e[static_cast<std::size_t>(a - 1)] * e[static_cast<std::size_t>(b - 1)])).eval();
  };
  out.push_back(make_check("theta_anticommutation",
                           max_abs(theta_product(1, 2) + theta_product(2, 1)), tol));
  out.push_back(make_check(
      "theta_squares",
      std::max(max_abs(theta_product(1, 1)), max_abs(theta_product(2, 2))), tol));

  // pair representation over one Grassmann variable: elements (a + b theta)
  // stored as coefficient pairs, multiplied componentwise on the direct sum
  using G = std::array<Complex, 2>;
  auto gmul = [](const G& x, const G& y) { return G{x[0] * y[0], x[0] * y[1] + x[1] * y[0]}; };
  const std::array<G, 2> x1 = {G{0.0, 1.0}, G{1.0, 0.0}};
  const std::array<G, 2> x2 = {G{1.0, 0.0}, G{0.0, 1.0}};
  const std::array<G, 2> prod = {gmul(x1[0], x2[0]), gmul(x1[1], x2[1])};
  const std::array<G, 2> theta_theta = {G{0.0, 1.0}, G{0.0, 1.0}};
  double pair_res = 0.0;
  for (int comp = 0; comp < 2; ++comp)
    for (int k = 0; k < 2; ++k)
      pair_res = std::max(pair_res, std::abs(prod[static_cast<std::size_t>(comp)][static_cast<std::size_t>(k)] -
                                             theta_theta[static_cast<std::size_t>(comp)][static_cast<std::size_t>(k)]));
  out.push_back(make_check("pair_representation", pair_res, tol));
  return out;
}

}  // namespace fockforge
