#include "qhom/relparse.hpp"

#include <cctype>
#include <sstream>

namespace qhom {

bool FreeElement::is_zero() const {
  for (const auto& [d, v] : parts)
    if (!v.is_zero())
      return false;
  return true;
}

std::vector<int> FreeElement::degrees() const {
  std::vector<int> ds;
  for (const auto& [d, v] : parts)
    if (!v.is_zero())
      ds.push_back(d);
  return ds;
}

namespace {

long power(int base, int exp) {
  long p = 1;
  for (int i = 0; i < exp; ++i)
    p *= base;
  return p;
}

FreeElement fe_scalar(Field f, int n, Scalar s) {
  FreeElement e{f, n, {}};
  if (!s.is_zero())
    e.parts[0] = SVec::unit(0, std::move(s));
  return e;
}

FreeElement fe_add(const FreeElement& a, const FreeElement& b, bool negate_b) {
  FreeElement r = a;
  Scalar sign = negate_b ? Scalar::from_int(a.field, -1) : Scalar::one(a.field);
  for (const auto& [d, v] : b.parts) {
    auto it = r.parts.find(d);
    if (it == r.parts.end()) {
      r.parts[d] = scaled(v, sign);
    } else {
      axpy(it->second, sign, v);
      if (it->second.is_zero())
        r.parts.erase(it);
    }
  }
  return r;
}

FreeElement fe_mul(const FreeElement& a, const FreeElement& b) {
  FreeElement r{a.field, a.n, {}};
  for (const auto& [da, va] : a.parts)
    for (const auto& [db, vb] : b.parts) {
      long shift = power(a.n, db);
      SVec prod;
      std::vector<std::pair<long, Scalar>> buf;
      for (const auto& [ia, ca] : va.e)
        for (const auto& [ib, cb] : vb.e)
          buf.emplace_back(static_cast<long>(ia) * shift + ib, ca * cb);
      std::sort(buf.begin(), buf.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (auto& [idx, val] : buf) {
        if (!prod.e.empty() && prod.e.back().first == static_cast<int>(idx)) {
          prod.e.back().second += val;
          if (prod.e.back().second.is_zero())
            prod.e.pop_back();
        } else if (!val.is_zero()) {
          prod.e.emplace_back(static_cast<int>(idx), std::move(val));
        }
      }
      auto it = r.parts.find(da + db);
      if (it == r.parts.end()) {
        if (!prod.is_zero())
          r.parts[da + db] = std::move(prod);
      } else {
        axpy(it->second, Scalar::one(a.field), prod);
        if (it->second.is_zero())
          r.parts.erase(it);
      }
    }
  return r;
}

bool fe_is_scalar(const FreeElement& e, Scalar& out, Field f) {
  if (e.parts.empty()) {
    out = Scalar::zero(f);
    return true;
  }
  if (e.parts.size() == 1 && e.parts.begin()->first == 0) {
    out = e.parts.begin()->second.e.front().second;
    return true;
  }
  return false;
}

struct Token {
  enum Kind { Name, Number, Op, End } kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> toks;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      toks.push_back({Token::Name, text.substr(i, j - i), i});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      toks.push_back({Token::Number, text.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      toks.push_back({Token::Op, std::string(1, c), i});
      ++i;
    } else {
      fail(Errc::ParseError,
           "syntax error at position " + std::to_string(i) + ": unexpected character '" +
               std::string(1, c) + "'");
    }
  }
  toks.push_back({Token::End, "", text.size()});
  return toks;
}

struct RelParser {
  const std::vector<Token>& toks;
  size_t at = 0;
  Field field;
  int n;
  const std::vector<std::string>& gens;

  const Token& peek() const { return toks[at]; }
  bool accept_op(const std::string& op) {
    if (toks[at].kind == Token::Op && toks[at].text == op) {
      ++at;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::ParseError,
         "syntax error at position " + std::to_string(toks[at].pos) + ": " + msg);
  }

  int gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == name)
        return static_cast<int>(i);
    return -1;
  }

  FreeElement expr() {
    bool neg = false;
    while (true) {
      if (accept_op("-"))
        neg = !neg;
      else if (accept_op("+"))
        ;
      else
        break;
    }
    FreeElement r = term();
    if (neg)
      r = fe_add(fe_scalar(field, n, Scalar::zero(field)), r, true);
    for (;;) {
      if (accept_op("+"))
        r = fe_add(r, term(), false);
      else if (accept_op("-"))
        r = fe_add(r, term(), true);
      else
        return r;
    }
  }

  FreeElement term() {
    FreeElement r = factor();
    for (;;) {
      if (accept_op("*")) {
        r = fe_mul(r, factor());
      } else if (accept_op("/")) {
        size_t div_pos = toks[at - 1].pos;
        FreeElement d = factor();
        Scalar s = Scalar::zero(field);
        if (!fe_is_scalar(d, s, field))
          fail(Errc::ParseError, "syntax error at position " + std::to_string(div_pos) +
                                     ": divisor must be a scalar");
        r = fe_mul(r, fe_scalar(field, n, s.inverse()));
      } else {
        return r;
      }
    }
  }

  FreeElement factor() {
    bool neg = false;
    while (accept_op("-"))
      neg = !neg;
    FreeElement r = atom();
    while (accept_op("^")) {
      bool eneg = false;
      while (accept_op("-"))
        eneg = !eneg;
      if (peek().kind != Token::Number)
        error("expected integer exponent");
      long e = std::stol(peek().text);
      ++at;
      if (eneg)
        e = -e;
      Scalar s = Scalar::zero(field);
      if (fe_is_scalar(r, s, field)) {
        r = fe_scalar(field, n, s.pow(e));
      } else {
        if (e < 0)
          error("negative power of a non-scalar");
        FreeElement acc = fe_scalar(field, n, Scalar::one(field));
        for (long k = 0; k < e; ++k)
          acc = fe_mul(acc, r);
        r = acc;
      }
    }
    if (neg)
      r = fe_add(fe_scalar(field, n, Scalar::zero(field)), r, true);
    return r;
  }

  FreeElement atom() {
    const Token& t = peek();
    if (t.kind == Token::Op && t.text == "(") {
      ++at;
      FreeElement r = expr();
      if (!accept_op(")"))
        error("expected ')'");
      return r;
    }
    if (t.kind == Token::Number) {
      ++at;
      return fe_scalar(field, n, Scalar::from_rational(field, mpq_class(t.text)));
    }
    if (t.kind == Token::Name) {
      int gi = gen_index(t.text);
      if (gi >= 0) {
        ++at;
        FreeElement e{field, n, {}};
        e.parts[1] = SVec::unit(gi, Scalar::one(field));
        return e;
      }
      if (t.text == "q" && field == Field::Qq) {
        ++at;
        return fe_scalar(field, n, Scalar::q());
      }
      error("unknown name '" + t.text + "'");
    }
    error("expected an atom");
  }
};

} // namespace

FreeElement eval_relation(const std::string& text,
                          const std::vector<std::string>& generators, Field field) {
  std::vector<Token> toks = tokenize(text);
  RelParser p{toks, 0, field, static_cast<int>(generators.size()), generators};
  FreeElement e = p.expr();
  if (p.peek().kind != Token::End)
    p.error("trailing input");
  return e;
}

std::pair<int, SVec> parse_relation(const std::string& text,
                                    const std::vector<std::string>& generators,
                                    Field field) {
  FreeElement e = eval_relation(text, generators, field);
  std::vector<int> ds = e.degrees();
  if (ds.empty())
    fail(Errc::ParseError, "relation '" + text + "' is zero");
  if (ds.size() > 1) {
    std::string lst;
    for (size_t i = 0; i < ds.size(); ++i)
      lst += (i ? ", " : "") + std::to_string(ds[i]);
    fail(Errc::ParseError, "relation '" + text + "' is inhomogeneous (degrees " + lst + ")");
  }
  return {ds[0], e.parts.at(ds[0])};
}

std::string render_relation(Field field, const std::vector<std::string>& labels,
                            int degree, const SVec& v) {
  if (v.is_zero())
    return "0";
  int n = static_cast<int>(labels.size());
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, coef] : v.e) {
    // unpack the big-endian word
    std::vector<int> word(degree);
    long rest = idx;
    for (int k = degree; k-- > 0;) {
      word[k] = static_cast<int>(rest % n);
      rest /= n;
    }
    std::string plain = coef.str();
    bool negated = !plain.empty() && plain[0] == '-';
    if (first) {
      if (negated)
        out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    std::string mag = (negated ? coef.negate() : coef).str_factor();
    if (degree == 0) {
      out << mag;
      continue;
    }
    if (mag != "1")
      out << mag << "*";
    for (int k = 0; k < degree; ++k)
      out << (k ? "*" : "") << labels[word[k]];
  }
  return out.str();
}

} // namespace qhom
