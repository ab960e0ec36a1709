#include "qhom/report.hpp"

#include <sstream>

namespace qhom {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass)
      return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["field"] = field;
  j["seed"] = seed;
  j["elapsed_ms"] = elapsed_ms;
  j["output"] = output;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["degree_lo"] = c.degree_lo;
    jc["degree_hi"] = c.degree_hi;
    jc["pass"] = c.pass;
    if (!c.witness.empty())
      jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  return j;
}

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.field = j.at("field").get<std::string>();
  r.seed = j.at("seed").get<unsigned long>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (j.contains("output"))
    r.output = j.at("output").get<std::vector<std::string>>();
  for (const auto& jc : j.at("checks")) {
    CheckRecord c;
    c.name = jc.at("name").get<std::string>();
    c.degree_lo = jc.at("degree_lo").get<int>();
    c.degree_hi = jc.at("degree_hi").get<int>();
    c.pass = jc.at("pass").get<bool>();
    if (jc.contains("witness"))
      c.witness = jc.at("witness").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& line : output)
    out << line << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (c.degree_hi > 0)
      out << "  [degrees " << c.degree_lo << ".." << c.degree_hi << "]";
    if (!c.witness.empty())
      out << "  witness: " << c.witness;
    out << "\n";
  }
  if (!checks.empty()) {
    int passed = 0;
    for (const auto& c : checks)
      passed += c.pass ? 1 : 0;
    out << passed << "/" << checks.size() << " checks passed ("
        << static_cast<long>(elapsed_ms) << " ms)\n";
  }
  return out.str();
}

} // namespace qhom
