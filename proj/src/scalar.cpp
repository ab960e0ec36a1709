#include "qhom/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qhom {

std::string field_name(Field f) { return f == Field::Q ? "Q" : "Q(q)"; }

Field field_from_name(const std::string& name) {
  if (name == "Q")
    return Field::Q;
  if (name == "Q(q)" || name == "Qq")
    return Field::Qq;
  fail(Errc::ParseError, "unknown field tag '" + name + "' (expected Q or Q(q))");
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const mpq_class& c) {
  if (c != 0)
    coef_.push_back(c);
}

Poly Poly::variable() {
  Poly p;
  p.coef_ = {mpq_class(0), mpq_class(1)};
  return p;
}

bool Poly::is_one() const { return coef_.size() == 1 && coef_[0] == 1; }

const mpq_class& Poly::leading() const {
  if (is_zero())
    fail(Errc::DivisionByZero, "leading coefficient of zero polynomial");
  return coef_.back();
}

mpq_class Poly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coef_.size()))
    return mpq_class(0);
  return coef_[k];
}

void Poly::trim() {
  while (!coef_.empty() && coef_.back() == 0)
    coef_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.coef_.resize(std::max(coef_.size(), o.coef_.size()));
  for (size_t i = 0; i < r.coef_.size(); ++i) {
    if (i < coef_.size())
      r.coef_[i] += coef_[i];
    if (i < o.coef_.size())
      r.coef_[i] += o.coef_[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negate(); }

Poly Poly::negate() const {
  Poly r(*this);
  for (auto& c : r.coef_)
    c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero())
    return Poly();
  Poly r;
  r.coef_.assign(coef_.size() + o.coef_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == 0)
      continue;
    for (size_t j = 0; j < o.coef_.size(); ++j)
      r.coef_[i + j] += coef_[i] * o.coef_[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0)
    return Poly();
  Poly r(*this);
  for (auto& x : r.coef_)
    x *= c;
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.is_zero())
    fail(Errc::DivisionByZero, "polynomial division by zero");
  quo = Poly();
  rem = a;
  int db = b.degree();
  if (rem.degree() >= db)
    quo.coef_.assign(rem.degree() - db + 1, mpq_class(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    mpq_class c = rem.leading() / b.leading();
    quo.coef_[k] += c;
    for (int i = 0; i <= db; ++i)
      rem.coef_[k + i] -= c * b.coef_[i];
    rem.trim();
  }
  quo.trim();
}

Poly Poly::gcd_monic(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  if (x.is_zero())
    return x;
  return x.scaled(1 / x.leading());
}

std::string Poly::str() const {
  if (is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    mpq_class c = coef_[k];
    if (c == 0)
      continue;
    bool neg = c < 0;
    mpq_class ab = abs(c);
    if (first) {
      if (neg)
        out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (k == 0) {
      out << ab.get_str();
    } else {
      if (ab != 1)
        out << ab.get_str() << "*";
      out << "q";
      if (k > 1)
        out << "^" << k;
    }
  }
  return out.str();
}

// -------------------------------------------------------------- Scalar

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long n) { return from_rational(f, mpq_class(n)); }

Scalar Scalar::from_rational(Field f, const mpq_class& r) {
  Scalar s;
  s.field_ = f;
  if (f == Field::Q) {
    s.rat_ = r;
    s.rat_.canonicalize();
  } else {
    mpq_class c = r;
    c.canonicalize();
    s.num_ = Poly(c);
    s.den_ = Poly(mpq_class(1));
  }
  return s;
}

Scalar Scalar::q() {
  Scalar s;
  s.field_ = Field::Qq;
  s.num_ = Poly::variable();
  s.den_ = Poly(mpq_class(1));
  return s;
}

Scalar Scalar::ratfun(Poly num, Poly den) {
  Scalar s;
  s.field_ = Field::Qq;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (field_ == Field::Q)
    return;
  if (den_.is_zero())
    fail(Errc::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(mpq_class(1));
    return;
  }
  if (!den_.is_one()) {
    Poly g = Poly::gcd_monic(num_, den_);
    if (g.degree() > 0) {
      Poly q, r;
      Poly::divmod(num_, g, q, r);
      num_ = q;
      Poly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  mpq_class lc = den_.leading();
  if (lc != 1) {
    mpq_class ilc = 1 / lc;
    num_ = num_.scaled(ilc);
    den_ = den_.scaled(ilc);
  }
}

void Scalar::check_field(const Scalar& o) const {
  if (field_ != o.field_)
    fail(Errc::FieldMismatch, "cannot mix " + field_name(field_) + " with " + field_name(o.field_));
}

bool Scalar::is_zero() const {
  return field_ == Field::Q ? rat_ == 0 : num_.is_zero();
}

bool Scalar::is_one() const {
  return field_ == Field::Q ? rat_ == 1 : (num_.is_one() && den_.is_one());
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r(*this);
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r(*this);
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r(*this);
  r *= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_field(o);
  if (field_ == Field::Q) {
    rat_ += o.rat_;
  } else if (den_ == o.den_) {
    num_ = num_ + o.num_;
    normalize();
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_field(o);
  if (field_ == Field::Q) {
    rat_ -= o.rat_;
  } else if (den_ == o.den_) {
    num_ = num_ - o.num_;
    normalize();
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_field(o);
  if (field_ == Field::Q) {
    rat_ *= o.rat_;
  } else {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
  }
  return *this;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_field(o);
  return *this * o.inverse();
}

Scalar Scalar::negate() const {
  Scalar r(*this);
  if (field_ == Field::Q)
    r.rat_ = -r.rat_;
  else
    r.num_ = r.num_.negate();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    fail(Errc::DivisionByZero, "division by zero scalar");
  Scalar r;
  r.field_ = field_;
  if (field_ == Field::Q) {
    r.rat_ = 1 / rat_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
  }
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  Scalar r = one(field_);
  Scalar b(*this);
  while (e > 0) {
    if (e & 1)
      r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_)
    return false;
  if (field_ == Field::Q)
    return rat_ == o.rat_;
  return num_ == o.num_ && den_ == o.den_;
}

const mpq_class& Scalar::rational() const {
  if (field_ != Field::Q)
    fail(Errc::FieldMismatch, "rational() on a Q(q) scalar");
  return rat_;
}

std::string Scalar::str() const {
  if (field_ == Field::Q)
    return rat_.get_str();
  if (den_.is_one())
    return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string Scalar::str_factor() const {
  std::string s = str();
  // parenthesize sums so the rendering can multiply a word
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(')
      ++depth;
    else if (ch == ')')
      --depth;
    else if ((ch == '+' || ch == '-') && depth == 0 && i > 0)
      return "(" + s + ")";
    else if (ch == '/' && depth == 0 && field_ == Field::Qq)
      return "(" + s + ")";
  }
  return s;
}

// ------------------------------------------------- scalar literal parser

namespace {

struct ScalarLexer {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (pos < text.size())
      ++pos;
    return c;
  }
  [[noreturn]] void error(const std::string& msg) {
    fail(Errc::ParseError, "scalar syntax error at position " + std::to_string(pos) + ": " + msg);
  }
};

Scalar parse_expr(ScalarLexer& lx, Field f);

long parse_exponent(ScalarLexer& lx) {
  lx.skip_ws();
  bool neg = false;
  if (lx.peek() == '-') {
    lx.take();
    neg = true;
  }
  if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
    lx.error("expected integer exponent");
  long v = 0;
  while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
    v = v * 10 + (lx.text[lx.pos++] - '0');
  return neg ? -v : v;
}

Scalar parse_atom(ScalarLexer& lx, Field f) {
  char c = lx.peek();
  if (c == '(') {
    lx.take();
    Scalar s = parse_expr(lx, f);
    if (lx.peek() != ')')
      lx.error("expected ')'");
    lx.take();
    return s;
  }
  if (c == 'q') {
    lx.take();
    if (f != Field::Qq)
      lx.error("'q' is not a scalar of Q");
    return Scalar::q();
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string digits;
    lx.skip_ws();
    while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
      digits += lx.text[lx.pos++];
    return Scalar::from_rational(f, mpq_class(digits));
  }
  lx.error("expected scalar atom");
}

Scalar parse_factor(ScalarLexer& lx, Field f) {
  bool neg = false;
  while (lx.peek() == '-') {
    lx.take();
    neg = !neg;
  }
  Scalar s = parse_atom(lx, f);
  if (lx.peek() == '^') {
    lx.take();
    s = s.pow(parse_exponent(lx));
  }
  return neg ? s.negate() : s;
}

Scalar parse_term(ScalarLexer& lx, Field f) {
  Scalar s = parse_factor(lx, f);
  for (;;) {
    char c = lx.peek();
    if (c == '*') {
      lx.take();
      s = s * parse_factor(lx, f);
    } else if (c == '/') {
      lx.take();
      s = s / parse_factor(lx, f);
    } else {
      return s;
    }
  }
}

Scalar parse_expr(ScalarLexer& lx, Field f) {
  Scalar s = parse_term(lx, f);
  for (;;) {
    char c = lx.peek();
    if (c == '+') {
      lx.take();
      s = s + parse_term(lx, f);
    } else if (c == '-') {
      lx.take();
      s = s - parse_term(lx, f);
    } else {
      return s;
    }
  }
}

} // namespace

Scalar Scalar::parse(const std::string& text, Field f) {
  ScalarLexer lx{text};
  Scalar s = parse_expr(lx, f);
  lx.skip_ws();
  if (lx.pos != text.size())
    lx.error("trailing input");
  return s;
}

} // namespace qhom
