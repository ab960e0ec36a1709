#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhom/linalg.hpp"

namespace qhom {

/// Element of the free algebra on named generators, graded by word length.
/// Used only while evaluating relation expressions.
struct FreeElement {
  Field field;
  int n; // generator count
  std::map<int, SVec> parts; // degree -> coordinates in n^degree

  bool is_zero() const;
  std::vector<int> degrees() const;
};

/// Parses the relation DSL: generator names, scalar literals, + - * / ^ ( ).
/// A divisor must be scalar-valued. Returns the (degree, vector) pair and
/// rejects inhomogeneous or zero input.
std::pair<int, SVec> parse_relation(const std::string& text,
                                    const std::vector<std::string>& generators,
                                    Field field);

/// Full evaluation, for callers that want the graded pieces.
FreeElement eval_relation(const std::string& text,
                          const std::vector<std::string>& generators, Field field);

/// Renders a homogeneous vector as a relation expression over the labels;
/// parse_relation inverts this rendering exactly.
std::string render_relation(Field field, const std::vector<std::string>& labels,
                            int degree, const SVec& v);

} // namespace qhom
