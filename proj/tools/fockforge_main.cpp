#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fockforge/entwine.hpp"
#include "fockforge/fock.hpp"
#include "fockforge/logic.hpp"
#include "fockforge/projector.hpp"
#include "fockforge/report.hpp"
#include "fockforge/specfile.hpp"
#include "fockforge/twist.hpp"
#include "fockforge/version.hpp"

namespace ff = fockforge;

namespace {

struct Options {
  int levels = 4;
  double tol = ff::kDefaultCheckTol;
  std::string format = "text";
  std::string out;
};

constexpr const char* kShuffleNote =
    "twist coefficients are those of the companion operator on E (x) E; the conjugate-pairing "
    "operator is recovered by the index shuffle T^{ki}_{lj} = (T~)^{ij}_{kl}, and the starred "
    "variant of that shuffle is not used";

constexpr const char* kVacuumNote = "the vacuum is assigned unit norm; the level-0 Gram is [1]";

constexpr const char* kAllLevelsNote =
    "the deformed pairing <s|P_n t> is applied at every level, with no exceptional level";

constexpr const char* kTransitivityNote =
    "orthogonality transitivity is checked literally as an axiom of the relation, although "
    "orthogonality relations are not usually transitive";

int emit(const ff::VerificationReport& r, const Options& o,
         const std::optional<std::string>& text_override = std::nullopt) {
  const std::string payload = o.format == "json"
                                  ? ff::render_json(r)
                                  : (text_override ? *text_override : ff::render_text(r));
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    f << payload;
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
  } else {
    std::cout << payload;
  }
  return r.overall_pass() ? 0 : 1;
}

ff::VerificationReport construction_failure(nlohmann::json input, const std::string& message) {
  ff::VerificationReport r;
  r.input = std::move(input);
  r.add(ff::make_check("fock_construction", 1.0, 0.0, message));
  return r;
}

nlohmann::json spectrum_json(const ff::Matrix& gram) {
  nlohmann::json eigs = nlohmann::json::array();
  if (gram.size() != 0) {
    Eigen::SelfAdjointEigenSolver<ff::Matrix> es(((gram + gram.adjoint()) / 2.0).eval());
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
      eigs.push_back(es.eigenvalues()(k));
  }
  return eigs;
}

int run_catalog(const Options& o) {
  static const std::pair<const char*, const char*> entries[] = {
      {"zero", "T~ = 0: free statistics, identity Gram at every level"},
      {"boson", "flip: symmetric statistics"},
      {"fermion", "-flip: antisymmetric statistics"},
      {"q_flip", "q * flip: interpolating statistics, parameter q"},
      {"epsilon_diag", "T~(x^i (x) x^j) = eps^{ij} x^j (x) x^i with eps^{ij} eps^{ji} = 1"},
      {"custom", "arbitrary matrix on E (x) E supplied row-major as data"},
  };
  ff::VerificationReport r;
  nlohmann::json list = nlohmann::json::array();
  std::string text = std::string(ff::kToolName) + " " + ff::kToolVersion + "\n";
  for (const auto& [kind, description] : entries) {
    list.push_back({{"kind", kind}, {"description", description}});
    char line[160];
    std::snprintf(line, sizeof line, "%-14s %s\n", kind, description);
    text += line;
  }
  r.summary = {{"catalog", list}};
  text += "overall: PASS\n";
  return emit(r, o, text);
}

int run_twist_check(const std::string& file, const Options& o) {
  const ff::TwistSpec spec = ff::parse_twist_spec(ff::load_json_file(file));
  ff::VerificationReport r;
  r.input = spec.echo;
  r.add(ff::check_yang_baxter(spec.twist, o.tol));
  r.add(ff::check_hermitian(spec.twist, o.tol));
  r.add(ff::check_norm_bound(spec.twist));
  if (spec.b_op) {
    if (spec.b_op->mu) r.add(ff::check_hecke(spec.twist, *spec.b_op->mu, o.tol));
    r.add(ff::check_cd_conditions(spec.twist, *spec.b_op, o.tol));
  }
  r.notes.push_back(kShuffleNote);
  r.summary = {{"dimension", spec.dimension}, {"kind", ff::to_string(spec.twist.kind)}};
  return emit(r, o);
}

int run_fock_build(const std::string& file, const Options& o) {
  const ff::TwistSpec spec = ff::parse_twist_spec(ff::load_json_file(file));
  ff::GradedFockSpace f;
  try {
    f = ff::build_fock(spec.twist, spec.b_op, o.levels, o.tol);
  } catch (const std::runtime_error& e) {
    return emit(construction_failure(spec.echo, e.what()), o);
  }
  ff::VerificationReport r;
  r.input = spec.echo;
  r.add(f.build_checks);
  if (f.tower.b_kernel_residual)
    r.add(ff::make_check("b_generators_within_kernel", *f.tower.b_kernel_residual, o.tol));
  nlohmann::json dims = nlohmann::json::array();
  nlohmann::json spectra = nlohmann::json::array();
  for (int n = 0; n <= f.n_max; ++n) {
    dims.push_back(f.dim(n));
    spectra.push_back(spectrum_json(f.gram_restricted[static_cast<std::size_t>(n)]));
  }
  r.summary = {{"dimensions", dims}, {"gram_spectra", spectra}, {"well_defined", f.well_defined}};
  r.notes.push_back(kVacuumNote);
  r.notes.push_back(kAllLevelsNote);
  return emit(r, o);
}

int run_fock_ccr(const std::string& file, const Options& o) {
  const ff::TwistSpec spec = ff::parse_twist_spec(ff::load_json_file(file));
  ff::GradedFockSpace f;
  try {
    f = ff::build_fock(spec.twist, spec.b_op, o.levels, o.tol);
  } catch (const std::runtime_error& e) {
    return emit(construction_failure(spec.echo, e.what()), o);
  }
  ff::VerificationReport r;
  r.input = spec.echo;
  r.add(ff::verify_adjointness(f, o.tol));
  r.add(ff::verify_ccr(f, o.tol));
  nlohmann::json dims = nlohmann::json::array();
  for (int n = 0; n <= f.n_max; ++n) dims.push_back(f.dim(n));
  r.summary = {{"dimensions", dims}};
  return emit(r, o);
}

int run_fock_oracle(const std::string& file, const Options& o) {
  const ff::TwistSpec spec = ff::parse_twist_spec(ff::load_json_file(file));
  ff::VerificationReport r;
  r.input = spec.echo;
  for (int n = 1; n <= o.levels; ++n) {
    const ff::Matrix rec = ff::build_P(spec.twist, n).mat;
    const ff::Matrix sym = ff::quasi_symmetrizer(spec.twist, n).mat;
    const double res = (rec - sym).cwiseAbs().maxCoeff();
    r.add(ff::make_check("quasi_symmetrizer_level_" + std::to_string(n), res, o.tol));
  }
  return emit(r, o);
}

int run_entwine_check(const std::string& file, const Options& o) {
  const ff::EntwineSpec spec = ff::parse_entwine_spec(ff::load_json_file(file));
  ff::VerificationReport r;
  r.input = spec.echo;
  r.add(ff::check_entwining(spec.structure, o.tol));
  if (spec.module) r.add(ff::check_entwined_module(spec.structure, *spec.module, o.tol));
  r.summary = {{"dim_algebra", spec.structure.algebra.dim},
               {"dim_coalgebra", spec.structure.coalgebra.dim}};
  return emit(r, o);
}

int run_entwine_cross(const std::string& file, const Options& o) {
  const ff::EntwineSpec spec = ff::parse_entwine_spec(ff::load_json_file(file));
  const ff::DualFactorization fd = ff::factorize_dual(spec.structure, o.tol);
  ff::VerificationReport r;
  r.input = spec.echo;
  r.add(fd.checks);
  r.notes.push_back(fd.diagnostics);
  r.summary = {{"factorizable", fd.factorizable}};
  if (fd.factorizable) r.summary["tau_dual"] = ff::matrix_to_json(fd.tau_dual);
  return emit(r, o);
}

int run_logic_check(const std::string& file, const Options& o) {
  const ff::LogicSpec spec = ff::parse_logic_spec(ff::load_json_file(file));
  ff::VerificationReport r;
  r.input = spec.echo;
  r.add(ff::check_logic(spec.logic));
  r.notes.push_back(kTransitivityNote);
  nlohmann::json words = nlohmann::json::array();
  for (const ff::Word& w : spec.logic.words) words.push_back(w.str());
  r.summary = {{"words", words}};
  return emit(r, o);
}

int run_logic_represent(const std::string& file, const std::string& twist_file,
                        const Options& o) {
  const ff::LogicSpec lspec = ff::parse_logic_spec(ff::load_json_file(file));
  const ff::TwistSpec tspec = ff::parse_twist_spec(ff::load_json_file(twist_file));
  int levels = std::max(o.levels, 1);
  for (const ff::Word& w : lspec.logic.words) {
    for (int x : w.letters)
      if (std::abs(x) > tspec.dimension)
        throw ff::SpecError("logic label " + std::to_string(x) + " exceeds the twist dimension");
    levels = std::max(levels, static_cast<int>(w.size()));
  }
  nlohmann::json input = {{"logic", lspec.echo}, {"twist", tspec.echo}};
  ff::GradedFockSpace f;
  try {
    f = ff::build_fock(tspec.twist, tspec.b_op, levels, o.tol);
  } catch (const std::runtime_error& e) {
    return emit(construction_failure(input, e.what()), o);
  }
  ff::VerificationReport r;
  r.input = std::move(input);
  r.add(ff::check_logic(lspec.logic));
  const ff::RepresentResult rr = ff::represent(lspec.logic, f, o.tol);
  r.add(rr.checks);
  r.notes.push_back(kTransitivityNote);
  for (const std::string& n : rr.notes) r.notes.push_back(n);
  nlohmann::json pairings = nlohmann::json::array();
  for (const ff::PairingEntry& p : rr.pairings)
    pairings.push_back({{"left", lspec.logic.words[p.a].str()},
                        {"right", lspec.logic.words[p.b].str()},
                        {"value", ff::complex_to_json(p.value)}});
  nlohmann::json dims = nlohmann::json::array();
  for (int n = 0; n <= f.n_max; ++n) dims.push_back(f.dim(n));
  r.summary = {{"dimensions", dims}, {"pairings", pairings}};
  return emit(r, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification tool for deformed statistics: twists, Fock quotients, "
               "entwinings, and quantum logics"};
  app.require_subcommand(1);

  Options o;
  app.add_option("--levels", o.levels, "highest tensor level to build")
      ->check(CLI::Range(1, 10));
  app.add_option("--tol", o.tol, "residual tolerance for checks")
      ->check(CLI::PositiveNumber)
      ->envname("FOCKFORGE_TOL");
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "write the report to a file instead of stdout");

  std::string file;
  std::string twist_file;

  auto* catalog = app.add_subcommand("catalog", "builtin twist statistics");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  auto* catalog_list = catalog->add_subcommand("list", "enumerate builtin statistics");
  catalog_list->fallthrough();

  auto* twist = app.add_subcommand("twist", "twist operator checks");
  twist->require_subcommand(1);
  twist->fallthrough();
  auto* twist_check = twist->add_subcommand("check", "yang-baxter, hermitian, norm, "
                                                     "hecke and consistency when given");
  twist_check->fallthrough();
  twist_check->add_option("file", file, "twist spec file")->required();

  auto* fock = app.add_subcommand("fock", "graded Fock space construction and checks");
  fock->require_subcommand(1);
  fock->fallthrough();
  auto* fock_build = fock->add_subcommand("build", "dimensions, Gram spectra, well-definedness");
  auto* fock_ccr = fock->add_subcommand("ccr", "commutation relations and adjointness");
  auto* fock_oracle = fock->add_subcommand("oracle", "recursive projector vs symmetrizer sum");
  for (CLI::App* sub : {fock_build, fock_ccr, fock_oracle}) {
    sub->fallthrough();
    sub->add_option("file", file, "twist spec file")->required();
  }

  auto* entwine = app.add_subcommand("entwine", "entwining structures and crossed products");
  entwine->require_subcommand(1);
  entwine->fallthrough();
  auto* entwine_check = entwine->add_subcommand("check", "entwining and module axioms");
  auto* entwine_cross = entwine->add_subcommand("cross", "dual cross symmetry and crossed "
                                                         "product certification");
  for (CLI::App* sub : {entwine_check, entwine_cross}) {
    sub->fallthrough();
    sub->add_option("file", file, "entwine spec file")->required();
  }

  auto* logic = app.add_subcommand("logic", "quantum logic checks and representation");
  logic->require_subcommand(1);
  logic->fallthrough();
  auto* logic_check = logic->add_subcommand("check", "logic axioms");
  logic_check->fallthrough();
  logic_check->add_option("file", file, "logic spec file")->required();
  auto* logic_represent = logic->add_subcommand("represent", "represent a logic in the Fock "
                                                             "space of a twist");
  logic_represent->fallthrough();
  logic_represent->add_option("file", file, "logic spec file")->required();
  logic_represent->add_option("twistfile", twist_file, "twist spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (catalog_list->parsed()) return run_catalog(o);
    if (twist_check->parsed()) return run_twist_check(file, o);
    if (fock_build->parsed()) return run_fock_build(file, o);
    if (fock_ccr->parsed()) return run_fock_ccr(file, o);
    if (fock_oracle->parsed()) return run_fock_oracle(file, o);
    if (entwine_check->parsed()) return run_entwine_check(file, o);
    if (entwine_cross->parsed()) return run_entwine_cross(file, o);
    if (logic_check->parsed()) return run_logic_check(file, o);
    if (logic_represent->parsed()) return run_logic_represent(file, twist_file, o);
  } catch (const ff::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command selected\n";
  return 2;
}
