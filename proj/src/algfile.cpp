#include "qhom/algfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qhom/relparse.hpp"

namespace qhom {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos)
    return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string parse_quoted(const std::string& v, const std::string& key) {
  std::string s = strip(v);
  if (s.size() < 2 || s.front() != '"' || s.back() != '"')
    fail(Errc::ParseError, "value of '" + key + "' must be a quoted string");
  return s.substr(1, s.size() - 2);
}

std::vector<std::string> parse_string_array(const std::string& v, const std::string& key) {
  std::string s = strip(v);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(Errc::ParseError, "value of '" + key + "' must be an array of strings");
  std::vector<std::string> out;
  size_t i = 1;
  size_t end = s.size() - 1;
  while (i < end) {
    while (i < end && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
      ++i;
    if (i >= end)
      break;
    if (s[i] != '"')
      fail(Errc::ParseError, "array entries of '" + key + "' must be quoted strings");
    size_t j = s.find('"', i + 1);
    if (j == std::string::npos || j > end)
      fail(Errc::ParseError, "unterminated string in '" + key + "'");
    out.push_back(s.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

} // namespace

AlgebraFile parse_algebra_text(const std::string& text, const std::string& name) {
  AlgebraFile file;
  file.name = name;
  bool saw_field = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    line = strip(line);
    if (line.empty())
      continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (key == "field") {
      file.field = field_from_name(parse_quoted(val, key));
      saw_field = true;
    } else if (key == "generators") {
      file.generators = parse_string_array(val, key);
    } else if (key == "relations") {
      file.relations = parse_string_array(val, key);
    } else if (key == "cutoff") {
      try {
        file.cutoff = std::stoi(val);
      } catch (...) {
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": cutoff must be an integer");
      }
    } else if (key == "name") {
      file.name = parse_quoted(val, key);
    } else {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!saw_field)
    fail(Errc::ParseError, "missing 'field' entry");
  if (file.generators.empty() && !file.relations.empty())
    fail(Errc::ParseError, "relations given without generators");
  for (const auto& g : file.generators) {
    if (!valid_identifier(g))
      fail(Errc::ParseError, "generator name '" + g + "' is not an identifier");
    if (g == "q" && file.field == Field::Qq)
      fail(Errc::ParseError, "generator 'q' clashes with the field parameter");
  }
  for (size_t i = 0; i < file.generators.size(); ++i)
    for (size_t j = i + 1; j < file.generators.size(); ++j)
      if (file.generators[i] == file.generators[j])
        fail(Errc::ParseError, "duplicate generator name '" + file.generators[i] + "'");
  if (file.cutoff < 1)
    fail(Errc::ParseError, "cutoff must be at least 1");
  return file;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(Errc::UsageError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  size_t slash = stem.find_last_of('/');
  if (slash != std::string::npos)
    stem = stem.substr(slash + 1);
  size_t dotp = stem.find_last_of('.');
  if (dotp != std::string::npos)
    stem = stem.substr(0, dotp);
  return parse_algebra_text(buf.str(), stem);
}

QuantumSpace build_space(const AlgebraFile& file, int max_degree) {
  int cutoff = max_degree > 0 ? max_degree : file.cutoff;
  std::vector<std::pair<int, SVec>> rels;
  rels.reserve(file.relations.size());
  for (const auto& r : file.relations)
    rels.push_back(parse_relation(r, file.generators, file.field));
  return QuantumSpace::from_presentation(file.field, file.generators, rels, cutoff);
}

Matrix parse_matrix_literal(const std::string& text, Field field) {
  std::string s = strip(text);
  if (s.rfind("diag(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(5, s.size() - 6);
    std::vector<Scalar> diag;
    int depth = 0;
    std::string cur;
    for (char c : inner + ",") {
      if (c == '(' || c == '[')
        ++depth;
      if (c == ')' || c == ']')
        --depth;
      if (c == ',' && depth == 0) {
        diag.push_back(Scalar::parse(strip(cur), field));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (diag.empty())
      fail(Errc::ParseError, "empty diagonal matrix literal");
    return Matrix::diagonal(field, diag);
  }
  if (s.size() >= 4 && s.front() == '[' && s.back() == ']') {
    // row-major [[..],[..]]
    std::vector<std::vector<Scalar>> rows;
    size_t i = 1;
    size_t end = s.size() - 1;
    while (i < end) {
      while (i < end && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
        ++i;
      if (i >= end)
        break;
      if (s[i] != '[')
        fail(Errc::ParseError, "expected '[' in matrix literal");
      int depth = 1;
      size_t j = i + 1;
      while (j < end && depth > 0) {
        if (s[j] == '[')
          ++depth;
        if (s[j] == ']')
          --depth;
        ++j;
      }
      if (depth != 0)
        fail(Errc::ParseError, "unbalanced matrix literal");
      std::string inner = s.substr(i + 1, j - i - 2);
      std::vector<Scalar> row;
      int pdepth = 0;
      std::string cur;
      for (char c : inner + ",") {
        if (c == '(')
          ++pdepth;
        if (c == ')')
          --pdepth;
        if (c == ',' && pdepth == 0) {
          row.push_back(Scalar::parse(strip(cur), field));
          cur.clear();
        } else {
          cur += c;
        }
      }
      rows.push_back(std::move(row));
      i = j;
    }
    if (rows.empty())
      fail(Errc::ParseError, "empty matrix literal");
    int n = static_cast<int>(rows.size());
    Matrix m(field, n, static_cast<int>(rows[0].size()));
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != m.cols())
        fail(Errc::ParseError, "ragged matrix literal");
      for (int c = 0; c < m.cols(); ++c)
        m.at(r, c) = rows[r][c];
    }
    return m;
  }
  fail(Errc::ParseError, "matrix literal must be diag(...) or [[...],[...]]");
}

} // namespace qhom
