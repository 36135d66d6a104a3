#include "fockforge/specfile.hpp"

#include <fstream>

namespace fockforge {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SpecError(where + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, "missing \"" + key + "\"");
  return *it;
}

int int_member(const json& j, const std::string& key, const std::string& where) {
  const json& v = member(j, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

Complex complex_value(const json& v, const std::string& where) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  fail(where, "expected a number or [re, im]");
}

Matrix matrix_value(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t rows = v.size();
  if (!v[0].is_array() || v[0].empty()) fail(where, "expected rows of entries");
  const std::size_t cols = v[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols) fail(where, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_value(v[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Eigen::MatrixXi int_matrix_value(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t rows = v.size();
  if (!v[0].is_array() || v[0].empty()) fail(where, "expected rows of entries");
  const std::size_t cols = v[0].size();
  Eigen::MatrixXi m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols) fail(where, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!v[r][c].is_number_integer()) fail(where, "expected integer entries");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[r][c].get<int>();
    }
  }
  return m;
}

Vector vector_value(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a non-empty array");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    out(static_cast<Eigen::Index>(k)) =
        complex_value(v[k], where + "[" + std::to_string(k) + "]");
  return out;
}

TwistOperator parse_twist_object(const json& v, int dimension, const std::string& where) {
  const json& kind_v = member(v, "kind", where);
  if (!kind_v.is_string()) fail(where + ".kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  try {
    if (kind == "zero") return make_zero_twist(dimension);
    if (kind == "boson") return make_boson_twist(dimension);
    if (kind == "fermion") return make_fermion_twist(dimension);
    if (kind == "q_flip")
      return make_q_flip_twist(dimension, complex_value(member(v, "q", where), where + ".q"));
    if (kind == "epsilon_diag") {
      if (v.contains("epsilon")) {
        Matrix eps = matrix_value(v["epsilon"], where + ".epsilon");
        if (eps.rows() != dimension || eps.cols() != dimension)
          fail(where + ".epsilon", "expected a dimension x dimension matrix");
        return make_epsilon_twist(EpsilonSpec::from_eps(std::move(eps)));
      }
      if (v.contains("sigma") && v.contains("omega")) {
        const Complex q = v.contains("q") ? complex_value(v["q"], where + ".q") : Complex(1.0, 0.0);
        const Eigen::MatrixXi sigma = int_matrix_value(v["sigma"], where + ".sigma");
        const Eigen::MatrixXi omega = int_matrix_value(v["omega"], where + ".omega");
        if (sigma.rows() != dimension || sigma.cols() != dimension || omega.rows() != dimension ||
            omega.cols() != dimension)
          fail(where, "sigma and omega must be dimension x dimension");
        return make_epsilon_twist(EpsilonSpec::from_exponents(sigma, omega, q));
      }
      fail(where, "epsilon_diag needs \"epsilon\" or \"sigma\" and \"omega\"");
    }
    if (kind == "custom") {
      Matrix data = matrix_value(member(v, "data", where), where + ".data");
      return make_custom_twist(dimension, std::move(data));
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where + ".kind", "unknown kind \"" + kind + "\"");
}

AlgebraPresentation parse_algebra(const json& v, const std::string& where) {
  AlgebraPresentation a;
  a.dim = int_member(v, "dim", where);
  if (a.dim < 1) fail(where + ".dim", "must be >= 1");
  a.mult = matrix_value(member(v, "mult", where), where + ".mult");
  a.unit = vector_value(member(v, "unit", where), where + ".unit");
  const auto d = static_cast<Eigen::Index>(a.dim);
  if (a.mult.rows() != d || a.mult.cols() != d * d)
    fail(where + ".mult", "expected dim x dim^2");
  if (a.unit.size() != d) fail(where + ".unit", "expected length dim");
  return a;
}

CoalgebraPresentation parse_coalgebra(const json& v, const std::string& where) {
  CoalgebraPresentation c;
  c.dim = int_member(v, "dim", where);
  if (c.dim < 1) fail(where + ".dim", "must be >= 1");
  c.comult = matrix_value(member(v, "comult", where), where + ".comult");
  const Vector counit = vector_value(member(v, "counit", where), where + ".counit");
  const auto d = static_cast<Eigen::Index>(c.dim);
  if (c.comult.rows() != d * d || c.comult.cols() != d)
    fail(where + ".comult", "expected dim^2 x dim");
  if (counit.size() != d) fail(where + ".counit", "expected length dim");
  c.counit = counit.transpose();
  return c;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(path + ": " + e.what());
  }
}

TwistSpec parse_twist_spec(const json& j) {
  TwistSpec spec;
  spec.dimension = int_member(j, "dimension", "spec");
  if (spec.dimension < 1) fail("spec.dimension", "must be >= 1");
  spec.twist = parse_twist_object(member(j, "twist", "spec"), spec.dimension, "spec.twist");
  if (j.contains("b_operator")) {
    const TwistOperator as_twist =
        parse_twist_object(j["b_operator"], spec.dimension, "spec.b_operator");
    std::optional<Complex> mu;
    if (j.contains("mu")) mu = complex_value(j["mu"], "spec.mu");
    try {
      spec.b_op = make_b_operator(spec.dimension, as_twist.t_tilde.mat, mu);
    } catch (const std::exception& e) {
      fail("spec.b_operator", e.what());
    }
  } else if (j.contains("mu")) {
    fail("spec.mu", "mu without b_operator; supply \"b_operator\"");
  }
  spec.echo = j;
  return spec;
}

EntwineSpec parse_entwine_spec(const json& j) {
  EntwineSpec spec;
  spec.structure.algebra = parse_algebra(member(j, "algebra", "spec"), "spec.algebra");
  spec.structure.coalgebra = parse_coalgebra(member(j, "coalgebra", "spec"), "spec.coalgebra");
  spec.structure.tau = matrix_value(member(j, "tau", "spec"), "spec.tau");
  const auto a = static_cast<Eigen::Index>(spec.structure.algebra.dim);
  const auto c = static_cast<Eigen::Index>(spec.structure.coalgebra.dim);
  if (spec.structure.tau.rows() != a * c || spec.structure.tau.cols() != c * a)
    fail("spec.tau", "expected (dimA * dimC) x (dimC * dimA)");
  if (j.contains("module")) {
    const json& m = j["module"];
    EntwinedModuleData mod;
    mod.dim = int_member(m, "dim", "spec.module");
    if (mod.dim < 1) fail("spec.module.dim", "must be >= 1");
    mod.action = matrix_value(member(m, "action", "spec.module"), "spec.module.action");
    mod.coaction = matrix_value(member(m, "coaction", "spec.module"), "spec.module.coaction");
    const auto md = static_cast<Eigen::Index>(mod.dim);
    if (mod.action.rows() != md || mod.action.cols() != md * a)
      fail("spec.module.action", "expected dim x (dim * dimA)");
    if (mod.coaction.rows() != md * c || mod.coaction.cols() != md)
      fail("spec.module.coaction", "expected (dim * dimC) x dim");
    spec.module = std::move(mod);
  }
  spec.echo = j;
  return spec;
}

LogicSpec parse_logic_spec(const json& j) {
  LogicSpec spec;
  spec.logic.ambient = int_member(j, "N", "spec");
  if (spec.logic.ambient < 1) fail("spec.N", "must be >= 1");
  const json& words = member(j, "words", "spec");
  if (!words.is_array()) fail("spec.words", "expected an array of words");
  for (std::size_t k = 0; k < words.size(); ++k) {
    const json& w = words[k];
    if (!w.is_array()) fail("spec.words[" + std::to_string(k) + "]", "expected a label array");
    std::vector<int> labels;
    for (const json& x : w) {
      if (!x.is_number_integer())
        fail("spec.words[" + std::to_string(k) + "]", "expected integer labels");
      labels.push_back(x.get<int>());
    }
    spec.logic.words.push_back(Word::from_labels(labels));
  }
  const json& ortho = member(j, "orthogonal", "spec");
  if (!ortho.is_array()) fail("spec.orthogonal", "expected an array of index pairs");
  for (std::size_t k = 0; k < ortho.size(); ++k) {
    const json& p = ortho[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      fail("spec.orthogonal[" + std::to_string(k) + "]", "expected [idx, idx]");
    const long long a = p[0].get<long long>();
    const long long b = p[1].get<long long>();
    if (a < 0 || b < 0 || a >= static_cast<long long>(spec.logic.words.size()) ||
        b >= static_cast<long long>(spec.logic.words.size()))
      fail("spec.orthogonal[" + std::to_string(k) + "]", "index out of range");
    spec.logic.ortho.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  spec.echo = j;
  return spec;
}

}  // namespace fockforge
