#pragma once

// JSON spec files consumed by the command-line tool. Complex scalars are
// numbers or [re, im] pairs, matrices are row-major nested lists. Malformed
// input raises SpecError, which the tool maps to exit code 2.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fockforge/entwine.hpp"
#include "fockforge/logic.hpp"
#include "fockforge/twist.hpp"

namespace fockforge {

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// reads and parses a file, anchoring parse errors to the path
nlohmann::json load_json_file(const std::string& path);

struct TwistSpec {
  int dimension = 0;
  TwistOperator twist;
  std::optional<BOperator> b_op;
  nlohmann::json echo;
};

// {"dimension": N, "twist": {"kind": ..., "q"?, "epsilon"?, "sigma"?,
//  "omega"?, "data"?}, "b_operator"?: twist-shaped object, "mu"?: complex}
TwistSpec parse_twist_spec(const nlohmann::json& j);

struct EntwineSpec {
  EntwiningStructure structure;
  std::optional<EntwinedModuleData> module;
  nlohmann::json echo;
};

// {"algebra": {"dim", "mult", "unit"}, "coalgebra": {"dim", "comult",
//  "counit"}, "tau": matrix, "module"?: {"dim", "action", "coaction"}}
EntwineSpec parse_entwine_spec(const nlohmann::json& j);

struct LogicSpec {
  QuantumLogic logic;
  nlohmann::json echo;
};

// {"N": int, "words": [[labels]], "orthogonal": [[idx, idx]]}; labels are
// positive i, negative -i for the conjugate, 0 for the empty placeholder
LogicSpec parse_logic_spec(const nlohmann::json& j);

}  // namespace fockforge
