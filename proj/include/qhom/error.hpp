#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

enum class Errc {
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  SingularMatrix,
  BadDegree,
  NonQuadratic,
  NotAdmissible,
  ConstructionMismatch,
  NotInCategory,
  EndpointMismatch,
  MorphismCheckFailed,
  ParseError,
  UsageError,
};

/// All engine failures are thrown as Error; `degree` is set for the
/// degree-indexed conditions (NotAdmissible, MorphismCheckFailed, ...).
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg, int degree = -1)
      : std::runtime_error(std::move(msg)), code_(code), degree_(degree) {}

  Errc code() const { return code_; }
  int degree() const { return degree_; }

private:
  Errc code_;
  int degree_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, int degree = -1) {
  throw Error(code, msg, degree);
}

} // namespace qhom
