#pragma once

#include <utility>
#include <vector>

#include "qhom/scalar.hpp"

namespace qhom {

/// Sparse coordinate vector: entries sorted by column, no explicit zeros.
struct SVec {
  std::vector<std::pair<int, Scalar>> e;

  bool is_zero() const { return e.empty(); }
  int lead() const { return e.front().first; }
  int trail() const { return e.back().first; }
  const Scalar* at(int col) const;
  void push(int col, Scalar c);
  static SVec unit(int col, Scalar c);

  bool operator==(const SVec& o) const { return e == o.e; }
};

/// v += c * w
void axpy(SVec& v, const Scalar& c, const SVec& w);
void scale(SVec& v, const Scalar& c);
SVec scaled(const SVec& v, const Scalar& c);
SVec add(const SVec& a, const SVec& b);
Scalar dot(Field f, const SVec& a, const SVec& b);

/// Dense matrix over the session field. Used for the small data of the
/// engine (sigma blocks, degree-1 maps, coefficient tables); large
/// degree-d operators are never materialized densely.
class Matrix {
public:
  Matrix() : field_(Field::Q), rows_(0), cols_(0) {}
  Matrix(Field f, int rows, int cols);
  static Matrix identity(Field f, int n);
  static Matrix diagonal(Field f, const std::vector<Scalar>& diag);

  Field field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  Matrix inverse() const; // throws SingularMatrix
  bool operator==(const Matrix& o) const;
  bool is_identity() const;

  SVec row_svec(int i) const;
  SVec col_svec(int j) const;
  std::vector<SVec> to_rows() const;
  SVec apply(const SVec& v) const; // matrix * column vector

  std::string str() const;

private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Result of row reduction: canonical reduced rows with ascending pivots.
struct Echelon {
  std::vector<SVec> rows;
  std::vector<int> pivots;
};

/// Canonical reduced row echelon form of a family of sparse rows.
Echelon rref_rows(Field f, int ambient, std::vector<SVec> input);

/// rref of a dense matrix: rank plus canonical basis of the row space.
std::pair<int, Matrix> rref(const Matrix& m);

/// Linear subspace of a coordinate space, held as its canonical reduced
/// row-echelon basis. Equality of values is equality of subspaces.
class Subspace {
public:
  Subspace() : field_(Field::Q), ambient_(0) {}
  Subspace(Field f, int ambient) : field_(f), ambient_(ambient) {}

  static Subspace from_rows(Field f, int ambient, std::vector<SVec> rows);
  static Subspace full(Field f, int ambient);
  /// Trusted constructor: rows must already be canonical RREF.
  static Subspace from_canonical(Field f, int ambient, std::vector<SVec> rows);
  static Subspace from_matrix(const Matrix& m);

  Field field() const { return field_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SVec>& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return dim() == ambient_; }

  bool contains(const SVec& v) const;
  bool contains(const Subspace& o) const;
  /// Residual of reduction against the basis; zero iff contained.
  SVec reduce(SVec v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Annihilator under the coordinate dot pairing; ambient preserved.
  Subspace annihilator() const;
  /// Kronecker-product subspace in the concatenated big-endian indexing.
  Subspace tensor(const Subspace& o) const;

  Matrix basis_matrix() const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  Field field_;
  int ambient_;
  std::vector<SVec> rows_;
};

} // namespace qhom
