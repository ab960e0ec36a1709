#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qhom/error.hpp"

namespace qhom {

/// Ground field of a computation. Every container carries its field and all
/// arithmetic refuses to mix them; there is no implicit coercion Q -> Q(q).
enum class Field { Q, Qq };

std::string field_name(Field f);
Field field_from_name(const std::string& name);

/// Dense univariate polynomial in q over the rationals. Coefficients are
/// stored constant-term first with no trailing zeros, so representation is
/// canonical and operator== is structural equality.
class Poly {
public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  static Poly variable();

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  bool is_zero() const { return coef_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coef_.size() <= 1; }
  const mpq_class& leading() const;
  mpq_class coefficient(int k) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly negate() const;
  bool operator==(const Poly& o) const { return coef_ == o.coef_; }

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
  /// Monic gcd over Q[q]; gcd(0,0) = 0.
  static Poly gcd_monic(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;

  std::string str() const;

private:
  void trim();
  std::vector<mpq_class> coef_;
};

/// Element of the session field: a rational number, or a rational function
/// in q with monic denominator coprime to the numerator. Canonical form is
/// unique so operator== decides equality of field elements.
class Scalar {
public:
  Scalar() : field_(Field::Q), rat_(0) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long n);
  static Scalar from_rational(Field f, const mpq_class& r);
  static Scalar q();
  static Scalar ratfun(Poly num, Poly den);

  /// Parses the scalar literal syntax: integers, fractions a/b, polynomials
  /// in q with + - * ^, and parenthesized fractions like (q^2-1)/(q).
  static Scalar parse(const std::string& text, Field f);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar negate() const;
  Scalar inverse() const;
  Scalar pow(long e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const mpq_class& rational() const;
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  std::string str() const;
  /// str() wrapped in parentheses whenever the rendering contains a
  /// top-level + or -, so it can be used as a coefficient factor.
  std::string str_factor() const;

private:
  void normalize();
  void check_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_; // Field::Q payload
  Poly num_, den_; // Field::Qq payload
};

} // namespace qhom
