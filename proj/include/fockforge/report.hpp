#pragma once

// Verification reports: named residual checks against pinned tolerances,
// rendered as text tables or canonical JSON. The JSON form uses sorted keys
// and fixed 17-significant-digit float formatting so identical inputs yield
// byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "fockforge/tensor_core.hpp"

namespace fockforge {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string witness;  // first counterexample, empty when none
};

// pass iff residual <= tolerance
CheckResult make_check(std::string name, double residual, double tolerance,
                       std::string witness = "");

struct VerificationReport {
  nlohmann::json input;  // canonicalized echo of the parsed input
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  nlohmann::json summary;  // command-specific payload

  bool overall_pass() const;
  void add(CheckResult check);
  void add(const std::vector<CheckResult>& more);
};

// canonical serialization: objects with sorted keys, floats via "%.17g"
std::string to_canonical_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const VerificationReport& r);

std::string render_json(const VerificationReport& r);
std::string render_text(const VerificationReport& r);

// complex scalars serialize as [re, im]; matrices as row-major nested lists
nlohmann::json complex_to_json(const Complex& z);
nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace fockforge
