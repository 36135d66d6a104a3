#include "fockforge/logic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>

#include "fockforge/projector.hpp"

namespace fockforge {

namespace {

std::string ortho_name(const Word& u, const Word& v) {
  return "pairing " + u.str() + " _|_ " + v.str();
}

std::string complex_str(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%.6g, %.6g)", z.real(), z.imag());
  return buf;
}

}  // namespace

Word Word::from_labels(const std::vector<int>& labels) {
  Word w;
  for (int x : labels)
    if (x != 0) w.letters.push_back(x);
  return w;
}

bool Word::all_positive() const {
  return std::all_of(letters.begin(), letters.end(), [](int x) { return x > 0; });
}

bool Word::all_negative() const {
  return std::all_of(letters.begin(), letters.end(), [](int x) { return x < 0; });
}

std::string Word::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ",";
    if (letters[k] < 0) out += "*" + std::to_string(-letters[k]);
    else out += std::to_string(letters[k]);
  }
  return out + ")";
}

Word star(const Word& w) {
  Word out;
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (int& x : out.letters) x = -x;
  return out;
}

Word symmetric_action(const Permutation& pi, const Word& sigma) {
  if (!is_permutation(pi)) throw std::invalid_argument("not a permutation");
  if (pi.size() != sigma.size()) throw std::invalid_argument("permutation length must match word length");
  const Permutation inv = inverse(pi);
  Word out;
  out.letters.resize(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k)
    out.letters[k] = sigma.letters[static_cast<std::size_t>(inv[k])];
  return out;
}

QuantumLogic canonical_logic(int ambient, int max_length) {
  if (ambient < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
  QuantumLogic l;
  l.ambient = ambient;
  l.words.push_back(Word{});
  for (int n = 1; n <= max_length; ++n) {
    const std::size_t first = l.words.size();
    for (const MultiIndex& w : enumerate_basis(ambient, n)) l.words.push_back(Word{w.letters});
    const std::size_t count = l.words.size() - first;
    for (std::size_t k = 0; k < count; ++k) l.words.push_back(star(l.words[first + k]));
    if (n == 1) {
      // the elementary relation {*i} _|_ {j} for i != j; nothing else at
      // length one, so transitivity cannot chain through a singleton
      for (int i = 1; i <= ambient; ++i)
        for (int j = 1; j <= ambient; ++j)
          if (i != j)
            l.ortho.emplace_back(first + count + static_cast<std::size_t>(i - 1),
                                 first + static_cast<std::size_t>(j - 1));
    } else {
      // all distinct same-sign pairs in enumeration order: a strict total
      // order on each sign class, hence transitive and anti-reflexive
      for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
          l.ortho.emplace_back(first + a, first + b);
          l.ortho.emplace_back(first + count + a, first + count + b);
        }
    }
  }
  return l;
}

std::vector<CheckResult> check_logic(const QuantumLogic& l) {
  for (const auto& [a, b] : l.ortho)
    if (a >= l.words.size() || b >= l.words.size())
      throw std::invalid_argument("orthogonality pair index out of range");

  std::vector<CheckResult> out;

  double bad = 0.0;
  std::string witness;
  for (const Word& w : l.words)
    for (int x : w.letters)
      if (x == 0 || std::abs(x) > l.ambient) {
        if (bad == 0.0) witness = "word " + w.str();
        bad += 1.0;
      }
  out.push_back(make_check("logic_labels_in_range", bad, 0.0, witness));

  bad = 0.0;
  witness.clear();
  for (const auto& [a, b] : l.ortho)
    if (l.words[a] == l.words[b]) {
      if (bad == 0.0) witness = l.words[a].str() + " _|_ " + l.words[b].str();
      bad += 1.0;
    }
  out.push_back(make_check("logic_anti_reflexive", bad, 0.0, witness));

  std::set<std::pair<std::string, std::string>> rel;
  for (const auto& [a, b] : l.ortho) rel.emplace(l.words[a].str(), l.words[b].str());
  bad = 0.0;
  witness.clear();
  for (const auto& [a, b] : l.ortho)
    for (const auto& [c, d] : l.ortho) {
      if (!(l.words[b] == l.words[c])) continue;
      if (rel.count({l.words[a].str(), l.words[d].str()})) continue;
      if (bad == 0.0)
        witness = l.words[a].str() + " _|_ " + l.words[b].str() + " _|_ " + l.words[d].str() +
                  " but not " + l.words[a].str() + " _|_ " + l.words[d].str();
      bad += 1.0;
    }
  out.push_back(make_check("logic_transitive", bad, 0.0, witness));

  auto contains = [&l](const Word& w) {
    return std::any_of(l.words.begin(), l.words.end(), [&w](const Word& v) { return v == w; });
  };

  bad = 0.0;
  witness.clear();
  for (const Word& w : l.words)
    if (!contains(star(w))) {
      if (bad == 0.0) witness = "missing " + star(w).str();
      bad += 1.0;
    }
  out.push_back(make_check("logic_conjugation_closed", bad, 0.0, witness));

  bad = 0.0;
  witness.clear();
  for (const Word& w : l.words) {
    const std::set<int> labels(w.letters.begin(), w.letters.end());
    const Word s = star(w);
    const bool meets = std::any_of(s.letters.begin(), s.letters.end(),
                                   [&labels](int x) { return labels.count(x) > 0; });
    if (meets) {
      if (bad == 0.0) witness = "word " + w.str() + " shares labels with " + s.str();
      bad += 1.0;
    }
  }
  out.push_back(make_check("logic_conjugate_disjoint", bad, 0.0, witness));

  bad = 0.0;
  witness.clear();
  for (int i = 1; i <= l.ambient; ++i)
    for (int j = 1; j <= l.ambient; ++j) {
      if (i == j) continue;
      const Word ci{{-i}};
      const Word pj{{j}};
      if (!contains(ci) || !contains(pj)) continue;
      if (rel.count({ci.str(), pj.str()})) continue;
      if (bad == 0.0) witness = ci.str() + " _|_ " + pj.str() + " not declared";
      bad += 1.0;
    }
  out.push_back(make_check("logic_elementary_orthogonality", bad, 0.0, witness));

  return out;
}

std::vector<CheckResult> check_morphism(const LogicMorphism& f) {
  if (f.map.size() != f.source.words.size())
    throw std::invalid_argument("morphism map must cover every source word");
  for (std::size_t t : f.map)
    if (t >= f.target.words.size()) throw std::invalid_argument("morphism image index out of range");

  std::vector<CheckResult> out;

  double bad = 0.0;
  std::string witness;
  for (std::size_t s = 0; s < f.source.words.size(); ++s)
    if (f.source.words[s].empty() && !f.target.words[f.map[s]].empty()) {
      if (bad == 0.0) witness = "() -> " + f.target.words[f.map[s]].str();
      bad += 1.0;
    }
  out.push_back(make_check("morphism_preserves_empty", bad, 0.0, witness));

  auto source_index = [&f](const Word& w) {
    for (std::size_t k = 0; k < f.source.words.size(); ++k)
      if (f.source.words[k] == w) return std::optional<std::size_t>(k);
    return std::optional<std::size_t>();
  };

  bad = 0.0;
  witness.clear();
  for (std::size_t s = 0; s < f.source.words.size(); ++s) {
    const auto t = source_index(star(f.source.words[s]));
    const bool ok = t && f.target.words[f.map[*t]] == star(f.target.words[f.map[s]]);
    if (!ok) {
      if (bad == 0.0) witness = "word " + f.source.words[s].str();
      bad += 1.0;
    }
  }
  out.push_back(make_check("morphism_preserves_conjugation", bad, 0.0, witness));

  std::set<std::pair<std::string, std::string>> rel;
  for (const auto& [a, b] : f.target.ortho)
    rel.emplace(f.target.words[a].str(), f.target.words[b].str());
  bad = 0.0;
  witness.clear();
  for (const auto& [a, b] : f.source.ortho) {
    const Word& u = f.target.words[f.map[a]];
    const Word& v = f.target.words[f.map[b]];
    if (rel.count({u.str(), v.str()})) continue;
    if (bad == 0.0)
      witness = f.source.words[a].str() + " _|_ " + f.source.words[b].str() + " -> " + u.str() +
                ", " + v.str() + " not orthogonal";
    bad += 1.0;
  }
  out.push_back(make_check("morphism_preserves_orthogonality", bad, 0.0, witness));

  return out;
}

bool RepresentResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

RepresentResult represent(const QuantumLogic& l, const GradedFockSpace& f, double tol) {
  for (const auto& [a, b] : l.ortho)
    if (a >= l.words.size() || b >= l.words.size())
      throw std::invalid_argument("orthogonality pair index out of range");

  RepresentResult out;
  out.notes.push_back(
      "orthogonality of represented words is read as a vanishing Gram pairing");

  auto positive_index = [&f](const Word& w) {
    return MultiIndex(f.ambient, w.letters).position();
  };

  for (const Word& w : l.words) {
    for (int x : w.letters)
      if (x == 0 || std::abs(x) > f.ambient)
        throw std::out_of_range("label out of range for the Fock space: " + w.str());
    if (static_cast<int>(w.size()) > f.n_max)
      throw std::out_of_range("word longer than built levels: " + w.str());
    WordState ws;
    ws.word = w;
    ws.level = static_cast<int>(w.size());
    if (w.all_positive()) {
      ws.state = state_word(f, MultiIndex(f.ambient, w.letters));
    } else if (w.all_negative()) {
      ws.dual = true;
      ws.state = state_word(f, MultiIndex(f.ambient, star(w).letters));
    } else {
      throw std::invalid_argument("mixed-sign word has no representation: " + w.str());
    }
    out.states.push_back(std::move(ws));
  }

  for (const auto& [a, b] : l.ortho) {
    const Word& u = l.words[a];
    const Word& v = l.words[b];
    if (u.size() != v.size()) {
      // distinct levels of the Fock space are orthogonal by construction
      out.pairings.push_back({a, b, Complex(0.0, 0.0)});
      out.checks.push_back(make_check(ortho_name(u, v), 0.0, tol));
      continue;
    }
    const int n = static_cast<int>(u.size());
    Complex val;
    if (n == 0) {
      val = Complex(1.0, 0.0);  // the vacuum has unit norm
    } else {
      const Matrix& g = f.gram_full[static_cast<std::size_t>(n)];
      const auto pu = static_cast<Eigen::Index>(
          positive_index(u.all_negative() ? star(u) : u));
      const auto pv = static_cast<Eigen::Index>(
          positive_index(v.all_negative() ? star(v) : v));
      val = g(pu, pv);
      if (u.all_negative() && v.all_negative()) val = std::conj(val);
    }
    out.pairings.push_back({a, b, val});
    CheckResult c = make_check(ortho_name(u, v), std::abs(val), tol);
    if (!c.pass) c.witness = "pairing " + complex_str(val);
    out.checks.push_back(std::move(c));
  }

  std::set<int> lengths;
  for (const Word& w : l.words)
    if (w.all_positive() && w.size() >= 2) lengths.insert(static_cast<int>(w.size()));

  bool braid_ok = true;
  if (!lengths.empty()) {
    try {
      (void)braid_representation(f.twist, identity_permutation(*lengths.begin()), tol);
    } catch (const std::domain_error&) {
      braid_ok = false;
      out.notes.push_back(
          "braid representation not well-defined for this twist; equivariance not checked");
    }
  }
  if (braid_ok)
    for (int n : lengths) {
      const Matrix& q = f.tower.quotient[static_cast<std::size_t>(n)].vectors;
      double worst = 0.0;
      std::string witness;
      for (const Permutation& pi : symmetric_group(n)) {
        const Matrix s = braid_representation(f.twist, pi, tol).mat;
        for (const Word& w : l.words) {
          if (!(w.all_positive() && static_cast<int>(w.size()) == n)) continue;
          const Vector lhs = state_word(f, MultiIndex(f.ambient, symmetric_action(pi, w).letters));
          Vector e = Vector::Zero(s.rows());
          e(static_cast<Eigen::Index>(positive_index(w))) = 1.0;
          const Vector rhs = q.adjoint() * (s * e);
          const double res = (lhs - rhs).size() == 0 ? 0.0 : (lhs - rhs).cwiseAbs().maxCoeff();
          if (res > worst) {
            worst = res;
            std::string pi_str;
            for (std::size_t k = 0; k < pi.size(); ++k)
              pi_str += (k ? "," : "") + std::to_string(pi[k] + 1);
            witness = "word " + w.str() + ", permutation (" + pi_str + ")";
          }
        }
      }
      CheckResult c = make_check("operad_equivariance_level_" + std::to_string(n), worst, tol);
      if (!c.pass) c.witness = witness;
      out.checks.push_back(std::move(c));
    }

  return out;
}

}  // namespace fockforge
