#pragma once

#include <random>

#include "qhom/cohom.hpp"
#include "qhom/report.hpp"

namespace qhom {

struct VerifyOptions {
  unsigned long seed = 1;
};

/// Deterministic source of small test data.
class Rng {
public:
  explicit Rng(unsigned long seed) : g_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(g_() % static_cast<unsigned long>(hi - lo + 1));
  }
  /// Nonzero scalar from a small pool (includes q over Q(q)).
  Scalar unit_scalar(Field f);
  /// Small scalar, possibly zero.
  Scalar small_scalar(Field f);
  Matrix diagonal_sigma(Field f, int n);
  /// Arbitrary quadratic space on two generators.
  QuantumSpace random_quadratic(Field f, int cutoff);
  /// Two-generator space with monomial/binomial relations; stable under
  /// every diagonal twist.
  QuantumSpace random_binomial(Field f, int cutoff);
  Subspace random_subspace(Field f, int ambient);

private:
  std::mt19937_64 g_;
};

std::vector<std::string> verify_suite_names();

/// Runs one named law suite against the given space ("all" runs every
/// suite, sharing the expensive composition fixtures).
std::vector<CheckRecord> verify_suite(const std::string& suite, const QuantumSpace& a,
                                      const VerifyOptions& opts);

} // namespace qhom
