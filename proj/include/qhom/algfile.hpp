#pragma once

#include <string>
#include <vector>

#include "qhom/qspace.hpp"

namespace qhom {

/// Algebra definition file: a small TOML subset with the keys
///   field = "Q" | "Q(q)"
///   generators = ["x", "y"]
///   relations = ["x*y - q*y*x"]
///   cutoff = 4            (optional, default 4)
struct AlgebraFile {
  Field field = Field::Q;
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  int cutoff = 4;
  std::string name; // stem of the file it came from, for reports
};

AlgebraFile parse_algebra_text(const std::string& text, const std::string& name = "");
AlgebraFile load_algebra_file(const std::string& path);

/// Builds the quantum space; max_degree > 0 overrides the file cutoff.
QuantumSpace build_space(const AlgebraFile& file, int max_degree = -1);

/// Matrix literals for the sigma flags: diag(s1,...,sn) or row-major
/// [[a,b],[c,d]] with scalar-literal entries.
Matrix parse_matrix_literal(const std::string& text, Field field);

} // namespace qhom
