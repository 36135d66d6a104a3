#include "fockforge/entwine.hpp"

#include <stdexcept>
#include <string>

namespace fockforge {

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

void require_algebra_shape(const AlgebraPresentation& a, const char* who) {
  const auto d = static_cast<Eigen::Index>(a.dim);
  if (d < 1) throw std::invalid_argument(std::string(who) + ": dimension must be >= 1");
  if (a.mult.rows() != d || a.mult.cols() != d * d)
    throw std::invalid_argument(std::string(who) + ": multiplication must be dim x dim^2");
  if (a.unit.size() != d)
    throw std::invalid_argument(std::string(who) + ": unit must have length dim");
}

void require_coalgebra_shape(const CoalgebraPresentation& c, const char* who) {
  const auto d = static_cast<Eigen::Index>(c.dim);
  if (d < 1) throw std::invalid_argument(std::string(who) + ": dimension must be >= 1");
  if (c.comult.rows() != d * d || c.comult.cols() != d)
    throw std::invalid_argument(std::string(who) + ": comultiplication must be dim^2 x dim");
  if (c.counit.rows() != 1 || c.counit.cols() != d)
    throw std::invalid_argument(std::string(who) + ": counit must be 1 x dim");
}

}  // namespace

std::vector<CheckResult> AlgebraPresentation::validate(double tol) const {
  require_algebra_shape(*this, "algebra");
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<CheckResult> out;
  out.push_back(make_check("algebra_associativity",
                           max_abs(mult * kron(mult, identity(d)) - mult * kron(identity(d), mult)),
                           tol));
  const Matrix u(unit);
  const double unit_res = std::max(max_abs(mult * kron(u, identity(d)) - identity(d)),
                                   max_abs(mult * kron(identity(d), u) - identity(d)));
  out.push_back(make_check("algebra_unit", unit_res, tol));
  return out;
}

std::vector<CheckResult> CoalgebraPresentation::validate(double tol) const {
  require_coalgebra_shape(*this, "coalgebra");
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<CheckResult> out;
  out.push_back(make_check(
      "coalgebra_coassociativity",
      max_abs(kron(comult, identity(d)) * comult - kron(identity(d), comult) * comult), tol));
  const double counit_res = std::max(max_abs(kron(counit, identity(d)) * comult - identity(d)),
                                     max_abs(kron(identity(d), counit) * comult - identity(d)));
  out.push_back(make_check("coalgebra_counit", counit_res, tol));
  return out;
}

std::vector<CheckResult> check_entwining(const EntwiningStructure& e, double tol) {
  require_algebra_shape(e.algebra, "algebra");
  require_coalgebra_shape(e.coalgebra, "coalgebra");
  const auto a = static_cast<Eigen::Index>(e.algebra.dim);
  const auto c = static_cast<Eigen::Index>(e.coalgebra.dim);
  if (e.tau.rows() != a * c || e.tau.cols() != c * a)
    throw std::invalid_argument("tau must map C (x) A to A (x) C");

  std::vector<CheckResult> out = e.algebra.validate(tol);
  for (auto& chk : e.coalgebra.validate(tol)) out.push_back(std::move(chk));

  const Matrix& m = e.algebra.mult;
  const Matrix u(e.algebra.unit);
  const Matrix& delta = e.coalgebra.comult;
  const Matrix& eps = e.coalgebra.counit;
  const Matrix& tau = e.tau;

  out.push_back(make_check(
      "entwine_axiom_1_multiplication",
      max_abs(tau * kron(identity(c), m) -
              kron(m, identity(c)) * kron(identity(a), tau) * kron(tau, identity(a))),
      tol));
  out.push_back(make_check("entwine_axiom_2_unit",
                           max_abs(tau * kron(identity(c), u) - kron(u, identity(c))), tol));
  out.push_back(make_check(
      "entwine_axiom_3_comultiplication",
      max_abs(kron(identity(a), delta) * tau -
              kron(tau, identity(c)) * kron(identity(c), tau) * kron(delta, identity(a))),
      tol));
  out.push_back(make_check("entwine_axiom_4_counit",
                           max_abs(kron(identity(a), eps) * tau - kron(eps, identity(a))), tol));
  return out;
}

std::vector<CheckResult> check_entwined_module(const EntwiningStructure& e,
                                               const EntwinedModuleData& mod, double tol) {
  const auto a = static_cast<Eigen::Index>(e.algebra.dim);
  const auto c = static_cast<Eigen::Index>(e.coalgebra.dim);
  const auto m = static_cast<Eigen::Index>(mod.dim);
  if (m < 1) throw std::invalid_argument("module dimension must be >= 1");
  if (mod.action.rows() != m || mod.action.cols() != m * a)
    throw std::invalid_argument("module action must be dim x (dim * dimA)");
  if (mod.coaction.rows() != m * c || mod.coaction.cols() != m)
    throw std::invalid_argument("module coaction must be (dim * dimC) x dim");

  std::vector<CheckResult> out;
  const Matrix& act = mod.action;
  const Matrix& coact = mod.coaction;
  const Matrix u(e.algebra.unit);

  out.push_back(
      make_check("module_action_unit", max_abs(act * kron(identity(m), u) - identity(m)), tol));
  out.push_back(make_check(
      "module_action_associativity",
      max_abs(act * kron(act, identity(a)) - act * kron(identity(m), e.algebra.mult)), tol));
  out.push_back(make_check(
      "module_coaction_counit",
      max_abs(kron(identity(m), e.coalgebra.counit) * coact - identity(m)), tol));
  out.push_back(make_check(
      "module_coaction_coassociativity",
      max_abs(kron(coact, identity(c)) * coact - kron(identity(m), e.coalgebra.comult) * coact),
      tol));
  out.push_back(make_check(
      "module_entwined_compatibility",
      max_abs(coact * act - kron(act, identity(c)) * kron(identity(m), e.tau) *
                                kron(coact, identity(a))),
      tol));
  return out;
}

Matrix psi_1n(const EntwiningStructure& e, int n) {
  if (n < 0) throw std::invalid_argument("psi_1n requires n >= 0");
  const auto a = static_cast<Eigen::Index>(e.algebra.dim);
  const auto c = static_cast<Eigen::Index>(e.coalgebra.dim);
  auto apow = [a](int k) {
    Eigen::Index out = 1;
    for (int j = 0; j < k; ++j) out *= a;
    return out;
  };
  Matrix m = identity(c * apow(n));
  for (int k = 1; k <= n; ++k) m = kron(identity(apow(k - 1)), kron(e.tau, identity(apow(n - k)))) * m;
  return m;
}

CrossedProduct crossed_product(const CrossSymmetry& s, double tol) {
  require_algebra_shape(s.algebra_a, "algebra_a");
  require_algebra_shape(s.algebra_b, "algebra_b");
  const auto a = static_cast<Eigen::Index>(s.algebra_a.dim);
  const auto b = static_cast<Eigen::Index>(s.algebra_b.dim);
  if (s.psi.rows() != a * b || s.psi.cols() != b * a)
    throw std::invalid_argument("psi must map B (x) A to A (x) B");
  if (a * b > 16) throw std::invalid_argument("crossed product dimension capped at 16");

  const Matrix& ma = s.algebra_a.mult;
  const Matrix& mb = s.algebra_b.mult;
  const Matrix& psi = s.psi;
  const Eigen::Index w = a * b;

  CrossedProduct out;
  out.certification = s.algebra_a.validate(tol);
  for (auto& chk : s.algebra_b.validate(tol)) out.certification.push_back(std::move(chk));

  out.certification.push_back(make_check(
      "cross_axiom_a_multiplication",
      max_abs(psi * kron(identity(b), ma) -
              kron(ma, identity(b)) * kron(identity(a), psi) * kron(psi, identity(a))),
      tol));
  out.certification.push_back(make_check(
      "cross_axiom_b_multiplication",
      max_abs(psi * kron(mb, identity(a)) -
              kron(identity(a), mb) * kron(psi, identity(b)) * kron(identity(b), psi)),
      tol));

  const Matrix mw = kron(ma, mb) * kron(identity(a), kron(psi, identity(b)));
  const Matrix assoc = mw * kron(mw, identity(w)) - mw * kron(identity(w), mw);
  CheckResult assoc_check = make_check("crossed_associativity", max_abs(assoc), tol);
  if (!assoc_check.pass) {
    Eigen::Index row = 0, col = 0;
    assoc.cwiseAbs().maxCoeff(&row, &col);
    const int k = static_cast<int>(col % w);
    const int j = static_cast<int>((col / w) % w);
    const int i = static_cast<int>(col / (w * w));
    out.associativity_witness = {i, j, k};
    assoc_check.witness = "basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")";
  }
  out.certification.push_back(std::move(assoc_check));

  const Matrix uw = kron(Matrix(s.algebra_a.unit), Matrix(s.algebra_b.unit));
  const double unit_res = std::max(max_abs(mw * kron(uw, identity(w)) - identity(w)),
                                   max_abs(mw * kron(identity(w), uw) - identity(w)));
  out.certification.push_back(make_check("crossed_unit", unit_res, tol));

  out.algebra = AlgebraPresentation{static_cast<int>(w), mw, Vector(uw.col(0))};
  return out;
}

AlgebraPresentation dual_algebra(const CoalgebraPresentation& c) {
  require_coalgebra_shape(c, "coalgebra");
  const auto d = static_cast<Eigen::Index>(c.dim);
  Matrix mult(d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k) mult(i, j * d + k) = c.comult(j * d + k, i);
  return AlgebraPresentation{static_cast<int>(d), std::move(mult), Vector(c.counit.transpose())};
}

DualFactorization factorize_dual(const EntwiningStructure& e, double tol) {
  DualFactorization out;
  std::vector<CheckResult> axioms = check_entwining(e, tol);
  bool ok = true;
  for (const auto& chk : axioms) ok = ok && chk.pass;
  if (!ok) {
    out.factorizable = false;
    out.diagnostics = "entwining axioms not satisfied; factorization not attempted";
    out.checks = std::move(axioms);
    return out;
  }

  const auto a = static_cast<Eigen::Index>(e.algebra.dim);
  const auto c = static_cast<Eigen::Index>(e.coalgebra.dim);
  // the canonical pairing makes the defining system a re-indexing, so the
  // solution exists and is unique: tau~[(i,m),(j,k)] = tau[(m,k),(i,j)]
  Matrix tau_dual(c * a, a * c);
  for (Eigen::Index i = 0; i < c; ++i)
    for (Eigen::Index j = 0; j < a; ++j)
      for (Eigen::Index k = 0; k < c; ++k)
        for (Eigen::Index m = 0; m < a; ++m)
          tau_dual(i * a + m, j * c + k) = e.tau(m * c + k, i * a + j);

  Matrix ev = Matrix::Zero(1, c * c);
  for (Eigen::Index i = 0; i < c; ++i) ev(0, i * c + i) = 1.0;
  const Matrix lhs = kron(ev, identity(a)) * kron(identity(c), tau_dual);
  const Matrix rhs = kron(identity(a), ev) * kron(e.tau, identity(c));
  out.checks.push_back(make_check("dual_factorization_equation", max_abs(lhs - rhs), tol));

  CrossSymmetry cross{dual_algebra(e.coalgebra), e.algebra, tau_dual};
  CrossedProduct certified = crossed_product(cross, tol);
  for (auto& chk : certified.certification) out.checks.push_back(std::move(chk));

  out.factorizable = true;
  for (const auto& chk : out.checks) out.factorizable = out.factorizable && chk.pass;
  out.tau_dual = std::move(tau_dual);
  out.diagnostics = out.factorizable
                        ? "unique solution in the canonical dual basis"
                        : "solution found but cross certification failed";
  return out;
}

}  // namespace fockforge
