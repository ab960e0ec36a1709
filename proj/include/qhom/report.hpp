#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qhom/scalar.hpp"

namespace qhom {

struct CheckRecord {
  std::string name;
  int degree_lo = 0;
  int degree_hi = 0;
  bool pass = false;
  std::string witness; // failing relation rendering, empty on pass
};

/// Machine-readable verification report; deterministic for fixed inputs and
/// seed, and stable under a JSON round trip.
struct Report {
  std::string command;
  std::string field;
  unsigned long seed = 0;
  std::vector<CheckRecord> checks;
  std::vector<std::string> output; // human-oriented result lines
  double elapsed_ms = 0;

  bool all_pass() const;
  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string to_text() const;
};

} // namespace qhom
