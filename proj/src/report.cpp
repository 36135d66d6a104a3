#include "fockforge/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "fockforge/version.hpp"

namespace fockforge {

CheckResult make_check(std::string name, double residual, double tolerance,
                       std::string witness) {
  CheckResult c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  c.witness = std::move(witness);
  return c;
}

bool VerificationReport::overall_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(CheckResult check) { checks.push_back(std::move(check)); }

void VerificationReport::add(const std::vector<CheckResult>& more) {
  checks.insert(checks.end(), more.begin(), more.end());
}

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("report numbers must be finite");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void append_escaped(const std::string& s, std::string& out) {
  out += '"';
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  out += '"';
}

void dump_canonical(const nlohmann::json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      // nlohmann objects iterate in key order already; keep an explicit sort
      std::map<std::string, const nlohmann::json*> keys;
      for (auto it = j.begin(); it != j.end(); ++it) keys.emplace(it.key(), &it.value());
      out += "{\n";
      bool first = true;
      for (const auto& [key, val] : keys) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        append_escaped(key, out);
        out += ": ";
        dump_canonical(*val, out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_canonical(v, out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case nlohmann::json::value_t::string:
      append_escaped(j.get_ref<const std::string&>(), out);
      return;
    case nlohmann::json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case nlohmann::json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case nlohmann::json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case nlohmann::json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case nlohmann::json::value_t::null:
      out += "null";
      return;
    default:
      throw std::invalid_argument("unsupported json value type in report");
  }
}

}  // namespace

std::string to_canonical_json(const nlohmann::json& j) {
  std::string out;
  dump_canonical(j, out, 0);
  out += '\n';
  return out;
}

nlohmann::json to_json(const CheckResult& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["residual"] = c.residual;
  j["tolerance"] = c.tolerance;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["input"] = r.input;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["notes"] = r.notes;
  if (!r.summary.is_null()) j["summary"] = r.summary;
  j["overall_pass"] = r.overall_pass();
  return j;
}

std::string render_json(const VerificationReport& r) { return to_canonical_json(to_json(r)); }

std::string render_text(const VerificationReport& r) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%s %s\n", kToolName, kToolVersion);
  out += line;
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "%-44s residual %12.5e  tol %9.2e  %s\n", c.name.c_str(),
                  c.residual, c.tolerance, c.pass ? "PASS" : "FAIL");
    out += line;
    if (!c.witness.empty()) {
      std::snprintf(line, sizeof line, "    witness: %s\n", c.witness.c_str());
      out += line;
    }
  }
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  out += std::string("overall: ") + (r.overall_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fockforge
