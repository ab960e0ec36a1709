#include "qhom/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace qhom {

// ---------------------------------------------------------------- SVec

const Scalar* SVec::at(int col) const {
  auto it = std::lower_bound(e.begin(), e.end(), col,
                             [](const auto& p, int c) { return p.first < c; });
  if (it != e.end() && it->first == col)
    return &it->second;
  return nullptr;
}

void SVec::push(int col, Scalar c) {
  if (!c.is_zero())
    e.emplace_back(col, std::move(c));
}

SVec SVec::unit(int col, Scalar c) {
  SVec v;
  v.push(col, std::move(c));
  return v;
}

void axpy(SVec& v, const Scalar& c, const SVec& w) {
  if (c.is_zero() || w.is_zero())
    return;
  std::vector<std::pair<int, Scalar>> out;
  out.reserve(v.e.size() + w.e.size());
  size_t i = 0, j = 0;
  while (i < v.e.size() || j < w.e.size()) {
    if (j == w.e.size() || (i < v.e.size() && v.e[i].first < w.e[j].first)) {
      out.push_back(std::move(v.e[i++]));
    } else if (i == v.e.size() || w.e[j].first < v.e[i].first) {
      out.emplace_back(w.e[j].first, c * w.e[j].second);
      ++j;
    } else {
      Scalar s = v.e[i].second + c * w.e[j].second;
      if (!s.is_zero())
        out.emplace_back(v.e[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  v.e = std::move(out);
}

void scale(SVec& v, const Scalar& c) {
  if (c.is_zero()) {
    v.e.clear();
    return;
  }
  for (auto& p : v.e)
    p.second *= c;
}

SVec scaled(const SVec& v, const Scalar& c) {
  SVec r(v);
  scale(r, c);
  return r;
}

SVec add(const SVec& a, const SVec& b) {
  SVec r(a);
  if (!b.is_zero())
    axpy(r, Scalar::one(b.e.front().second.field()), b);
  return r;
}

Scalar dot(Field f, const SVec& a, const SVec& b) {
  Scalar s = Scalar::zero(f);
  size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first)
      ++i;
    else if (b.e[j].first < a.e[i].first)
      ++j;
    else {
      s += a.e[i].second * b.e[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

// -------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::diagonal(Field f, const std::vector<Scalar>& diag) {
  Matrix m(f, static_cast<int>(diag.size()), static_cast<int>(diag.size()));
  for (size_t i = 0; i < diag.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = diag[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero())
        continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero())
          r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::DimensionMismatch, "matrix sum shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::DimensionMismatch, "matrix difference shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_)
    fail(Errc::SingularMatrix, "inverse of a non-square matrix");
  int n = rows_;
  // Gauss-Jordan on [M | I]
  Matrix w(field_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      w.at(i, j) = at(i, j);
    w.at(i, n + i) = Scalar::one(field_);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!w.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0)
      fail(Errc::SingularMatrix, "matrix is singular");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j)
        std::swap(w.at(piv, j), w.at(col, j));
    Scalar inv = w.at(col, col).inverse();
    for (int j = 0; j < 2 * n; ++j)
      w.at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || w.at(i, col).is_zero())
        continue;
      Scalar c = w.at(i, col);
      for (int j = 0; j < 2 * n; ++j)
        w.at(i, j) -= c * w.at(col, j);
    }
  }
  Matrix r(field_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.at(i, j) = w.at(i, n + j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero())
        return false;
    }
  return true;
}

SVec Matrix::row_svec(int i) const {
  SVec v;
  for (int j = 0; j < cols_; ++j)
    if (!at(i, j).is_zero())
      v.e.emplace_back(j, at(i, j));
  return v;
}

SVec Matrix::col_svec(int j) const {
  SVec v;
  for (int i = 0; i < rows_; ++i)
    if (!at(i, j).is_zero())
      v.e.emplace_back(i, at(i, j));
  return v;
}

std::vector<SVec> Matrix::to_rows() const {
  std::vector<SVec> rows;
  rows.reserve(rows_);
  for (int i = 0; i < rows_; ++i)
    rows.push_back(row_svec(i));
  return rows;
}

SVec Matrix::apply(const SVec& v) const {
  SVec r;
  std::vector<Scalar> acc(rows_, Scalar::zero(field_));
  for (const auto& [col, x] : v.e) {
    if (col >= cols_)
      fail(Errc::DimensionMismatch, "vector entry outside matrix domain");
    for (int i = 0; i < rows_; ++i) {
      if (!at(i, col).is_zero())
        acc[i] += at(i, col) * x;
    }
  }
  for (int i = 0; i < rows_; ++i)
    if (!acc[i].is_zero())
      r.e.emplace_back(i, std::move(acc[i]));
  return r;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << at(i, j).str();
    out << "]\n";
  }
  return out.str();
}

// ------------------------------------------------------------ rref core

Echelon rref_rows(Field f, int ambient, std::vector<SVec> input) {
  std::vector<int> pivot_of(ambient, -1);
  std::vector<SVec> rows;
  std::vector<int> pivots;
  // forward elimination into echelon form
  for (auto& v : input) {
    while (!v.is_zero()) {
      int c = v.lead();
      int p = pivot_of[c];
      if (p < 0)
        break;
      axpy(v, v.e.front().second.negate(), rows[p]);
    }
    if (v.is_zero())
      continue;
    int c = v.lead();
    scale(v, v.e.front().second.inverse());
    pivot_of[c] = static_cast<int>(rows.size());
    rows.push_back(std::move(v));
    pivots.push_back(c);
  }
  // back-substitution, highest pivot first; later rows are already reduced
  std::vector<int> order(rows.size());
  for (size_t i = 0; i < order.size(); ++i)
    order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivots[a] > pivots[b]; });
  for (int idx : order) {
    SVec& r = rows[idx];
    size_t k = 1;
    while (k < r.e.size()) {
      int c = r.e[k].first;
      int p = pivot_of[c];
      if (p >= 0 && p != idx)
        axpy(r, r.e[k].second.negate(), rows[p]);
      else
        ++k;
    }
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivots[a] < pivots[b]; });
  Echelon out;
  out.rows.reserve(rows.size());
  out.pivots.reserve(rows.size());
  for (int idx : order) {
    out.pivots.push_back(pivots[idx]);
    out.rows.push_back(std::move(rows[idx]));
  }
  (void)f;
  return out;
}

std::pair<int, Matrix> rref(const Matrix& m) {
  Echelon ech = rref_rows(m.field(), m.cols(), m.to_rows());
  Matrix basis(m.field(), static_cast<int>(ech.rows.size()), m.cols());
  for (size_t i = 0; i < ech.rows.size(); ++i)
    for (const auto& [col, val] : ech.rows[i].e)
      basis.at(static_cast<int>(i), col) = val;
  return {static_cast<int>(ech.rows.size()), basis};
}

// ------------------------------------------------------------ Subspace

Subspace Subspace::from_rows(Field f, int ambient, std::vector<SVec> rows) {
  Subspace s(f, ambient);
  Echelon ech = rref_rows(f, ambient, std::move(rows));
  s.rows_ = std::move(ech.rows);
  return s;
}

Subspace Subspace::full(Field f, int ambient) {
  Subspace s(f, ambient);
  s.rows_.reserve(ambient);
  for (int i = 0; i < ambient; ++i)
    s.rows_.push_back(SVec::unit(i, Scalar::one(f)));
  return s;
}

Subspace Subspace::from_canonical(Field f, int ambient, std::vector<SVec> rows) {
  Subspace s(f, ambient);
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::from_matrix(const Matrix& m) {
  return from_rows(m.field(), m.cols(), m.to_rows());
}

SVec Subspace::reduce(SVec v) const {
  size_t i = 0;
  size_t k = 0;
  while (k < v.e.size() && i < rows_.size()) {
    int c = v.e[k].first;
    int piv = rows_[i].lead();
    if (piv < c) {
      ++i;
    } else if (piv == c) {
      axpy(v, v.e[k].second.negate(), rows_[i]);
      ++i;
    } else {
      ++k;
    }
  }
  return v;
}

bool Subspace::contains(const SVec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_)
    fail(Errc::DimensionMismatch, "containment across different ambients");
  for (const auto& r : o.rows_)
    if (!contains(r))
      return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_ || o.field_ != field_)
    fail(Errc::DimensionMismatch, "subspace sum across different ambients");
  std::vector<SVec> rows = rows_;
  rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
  return from_rows(field_, ambient_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_ || o.field_ != field_)
    fail(Errc::DimensionMismatch, "subspace intersection across different ambients");
  return annihilator().sum(o.annihilator()).annihilator();
}

namespace {

SVec mirror_svec(const SVec& v, int ambient) {
  SVec r;
  r.e.reserve(v.e.size());
  for (auto it = v.e.rbegin(); it != v.e.rend(); ++it)
    r.e.emplace_back(ambient - 1 - it->first, it->second);
  return r;
}

} // namespace

Subspace Subspace::annihilator() const {
  // Reduce a second time with reversed column order; the free-column kernel
  // of that echelon form is canonical in the natural order.
  std::vector<SVec> mirrored;
  mirrored.reserve(rows_.size());
  for (const auto& r : rows_)
    mirrored.push_back(mirror_svec(r, ambient_));
  Echelon ech = rref_rows(field_, ambient_, std::move(mirrored));

  std::vector<bool> is_pivot(ambient_, false);
  for (int mp : ech.pivots)
    is_pivot[ambient_ - 1 - mp] = true;

  // bucket[c] collects (trailing pivot p, -value at column c) over all rows
  std::vector<std::vector<std::pair<int, Scalar>>> bucket(ambient_);
  for (const auto& mrow : ech.rows) {
    SVec row = mirror_svec(mrow, ambient_);
    int p = row.trail();
    for (const auto& [col, val] : row.e)
      if (col != p)
        bucket[col].emplace_back(p, val.negate());
  }

  std::vector<SVec> kernel;
  kernel.reserve(ambient_ - static_cast<int>(ech.rows.size()));
  for (int c = 0; c < ambient_; ++c) {
    if (is_pivot[c])
      continue;
    SVec v;
    v.e.reserve(1 + bucket[c].size());
    v.e.emplace_back(c, Scalar::one(field_));
    std::sort(bucket[c].begin(), bucket[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& p : bucket[c])
      v.e.push_back(std::move(p));
    kernel.push_back(std::move(v));
  }
  return from_canonical(field_, ambient_, std::move(kernel));
}

Subspace Subspace::tensor(const Subspace& o) const {
  if (field_ != o.field_)
    fail(Errc::FieldMismatch, "tensor of subspaces over different fields");
  // Kronecker product of canonical bases is canonical in the big-endian
  // concatenated indexing when rows come out sorted by (pivot_i, pivot_j).
  Subspace s(field_, ambient_ * o.ambient_);
  s.rows_.reserve(rows_.size() * o.rows_.size());
  for (const auto& u : rows_)
    for (const auto& w : o.rows_) {
      SVec v;
      v.e.reserve(u.e.size() * w.e.size());
      for (const auto& [cu, xu] : u.e)
        for (const auto& [cw, xw] : w.e)
          v.e.emplace_back(cu * o.ambient_ + cw, xu * xw);
      s.rows_.push_back(std::move(v));
    }
  return s;
}

Matrix Subspace::basis_matrix() const {
  Matrix m(field_, dim(), ambient_);
  for (int i = 0; i < dim(); ++i)
    for (const auto& [col, val] : rows_[i].e)
      m.at(i, col) = val;
  return m;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && rows_ == o.rows_;
}

} // namespace qhom
