#include "qhom/tensor.hpp"

#include <algorithm>

namespace qhom {

long TensorShape::word_index(const std::vector<int>& word) const {
  if (word.size() != dims.size())
    fail(Errc::DimensionMismatch, "word length does not match shape degree");
  long idx = 0;
  for (size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 1 || word[k] > dims[k])
      fail(Errc::DimensionMismatch, "letter out of range at position " + std::to_string(k + 1));
    idx = idx * dims[k] + (word[k] - 1);
  }
  return idx;
}

std::vector<int> TensorShape::index_word(long index) const {
  if (index < 0 || index >= total())
    fail(Errc::DimensionMismatch, "index out of range");
  std::vector<int> word(dims.size());
  for (size_t k = dims.size(); k-- > 0;) {
    word[k] = static_cast<int>(index % dims[k]) + 1;
    index /= dims[k];
  }
  return word;
}

Matrix kron(const std::vector<Matrix>& factors) {
  if (factors.empty())
    fail(Errc::DimensionMismatch, "kron of an empty factor list");
  Field f = factors.front().field();
  long rows = 1, cols = 1;
  for (const auto& m : factors) {
    rows *= m.rows();
    cols *= m.cols();
  }
  Matrix r(f, static_cast<int>(rows), static_cast<int>(cols));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      Scalar v = Scalar::one(f);
      long ri = i, cj = j;
      // big-endian: peel digits from the least significant (rightmost) factor
      for (size_t k = factors.size(); k-- > 0 && !v.is_zero();) {
        const Matrix& m = factors[k];
        v *= m.at(static_cast<int>(ri % m.rows()), static_cast<int>(cj % m.cols()));
        ri /= m.rows();
        cj /= m.cols();
      }
      r.at(static_cast<int>(i), static_cast<int>(j)) = v;
    }
  return r;
}

Scalar pairing(Field f, const SVec& fun, const SVec& vec) { return dot(f, fun, vec); }

// ------------------------------------------------------------- TensorOp

long TensorOp::ShuffleStage::map(long idx) const {
  long dxr = 1, dyr = 1;
  for (int k = 0; k < r; ++k) {
    dxr *= dx;
    dyr *= dy;
  }
  long block = dxr * dyr;
  long l = idx / (block * right);
  long rest = idx % (block * right);
  long s = rest / right;
  long rr = rest % right;

  long out;
  if (!inverse) {
    long xw = s / dyr, yw = s % dyr;
    out = 0;
    long weight = 1;
    for (int k = 0; k < r; ++k) {
      long xl = xw % dx, yl = yw % dy;
      out += (xl * dy + yl) * weight;
      weight *= static_cast<long>(dx) * dy;
      xw /= dx;
      yw /= dy;
    }
  } else {
    long xw = 0, yw = 0;
    long wx = 1, wy = 1;
    long s2 = s;
    for (int k = 0; k < r; ++k) {
      long pair = s2 % (static_cast<long>(dx) * dy);
      xw += (pair / dy) * wx;
      yw += (pair % dy) * wy;
      wx *= dx;
      wy *= dy;
      s2 /= static_cast<long>(dx) * dy;
    }
    out = xw * dyr + yw;
  }
  return (l * block + out) * right + rr;
}

TensorOp TensorOp::identity(Field f, long dim) {
  TensorOp op;
  op.field_ = f;
  op.src_ = op.tgt_ = dim;
  return op;
}

TensorOp TensorOp::kron_op(Field f, std::vector<Matrix> factors) {
  std::vector<Factor> fs;
  fs.reserve(factors.size());
  for (auto& m : factors)
    fs.push_back(Factor::dense(std::move(m)));
  return kron_op(f, std::move(fs));
}

TensorOp TensorOp::kron_op(Field f, std::vector<Factor> factors) {
  TensorOp op;
  op.field_ = f;
  op.src_ = op.tgt_ = 1;
  for (const auto& fac : factors) {
    op.src_ *= fac.cols();
    op.tgt_ *= fac.rows();
  }
  op.stages_.push_back(KronStage{std::move(factors)});
  return op;
}

TensorOp TensorOp::shuffle_op(Field f, int r, int dx, int dy, bool inverse) {
  TensorOp op;
  op.field_ = f;
  long total = 1;
  for (int k = 0; k < r; ++k)
    total *= static_cast<long>(dx) * dy;
  op.src_ = op.tgt_ = total;
  op.stages_.push_back(ShuffleStage{r, dx, dy, inverse, 1, 1});
  return op;
}

TensorOp TensorOp::dense_op(Matrix m) {
  TensorOp op;
  op.field_ = m.field();
  op.src_ = m.cols();
  op.tgt_ = m.rows();
  op.stages_.push_back(KronStage{{Factor::dense(std::move(m))}});
  return op;
}

TensorOp TensorOp::then(const TensorOp& next) const {
  if (tgt_ != next.src_)
    fail(Errc::DimensionMismatch, "tensor op composition shape mismatch");
  TensorOp op(*this);
  op.tgt_ = next.tgt_;
  op.stages_.insert(op.stages_.end(), next.stages_.begin(), next.stages_.end());
  return op;
}

TensorOp TensorOp::transpose() const {
  TensorOp op;
  op.field_ = field_;
  op.src_ = tgt_;
  op.tgt_ = src_;
  for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
    if (std::holds_alternative<KronStage>(*it)) {
      const auto& ks = std::get<KronStage>(*it);
      KronStage t;
      t.factors.reserve(ks.factors.size());
      for (const auto& fac : ks.factors)
        t.factors.push_back(fac.is_identity() ? fac : Factor::dense(fac.mat.transpose()));
      op.stages_.push_back(std::move(t));
    } else {
      ShuffleStage sh = std::get<ShuffleStage>(*it);
      sh.inverse = !sh.inverse; // a permutation's transpose is its inverse
      op.stages_.push_back(sh);
    }
  }
  return op;
}

TensorOp TensorOp::inverse() const {
  TensorOp op;
  op.field_ = field_;
  op.src_ = tgt_;
  op.tgt_ = src_;
  for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
    if (std::holds_alternative<KronStage>(*it)) {
      const auto& ks = std::get<KronStage>(*it);
      KronStage t;
      t.factors.reserve(ks.factors.size());
      for (const auto& fac : ks.factors)
        t.factors.push_back(fac.is_identity() ? fac : Factor::dense(fac.mat.inverse()));
      op.stages_.push_back(std::move(t));
    } else {
      ShuffleStage sh = std::get<ShuffleStage>(*it);
      sh.inverse = !sh.inverse;
      op.stages_.push_back(sh);
    }
  }
  return op;
}

TensorOp TensorOp::tensor(const TensorOp& a, const TensorOp& b) {
  if (a.field_ != b.field_)
    fail(Errc::FieldMismatch, "tensor of ops over different fields");
  TensorOp op;
  op.field_ = a.field_;
  op.src_ = a.src_ * b.src_;
  op.tgt_ = a.tgt_ * b.tgt_;
  // a (x) b = (a (x) id) . (id (x) b)
  for (const auto& st : a.stages_) {
    if (std::holds_alternative<KronStage>(st)) {
      KronStage ks = std::get<KronStage>(st);
      if (b.src_ > 1)
        ks.factors.push_back(Factor::identity(b.src_));
      op.stages_.push_back(std::move(ks));
    } else {
      ShuffleStage sh = std::get<ShuffleStage>(st);
      sh.right *= b.src_;
      op.stages_.push_back(sh);
    }
  }
  for (const auto& st : b.stages_) {
    if (std::holds_alternative<KronStage>(st)) {
      KronStage ks = std::get<KronStage>(st);
      if (a.tgt_ > 1)
        ks.factors.insert(ks.factors.begin(), Factor::identity(a.tgt_));
      op.stages_.push_back(std::move(ks));
    } else {
      ShuffleStage sh = std::get<ShuffleStage>(st);
      sh.left *= a.tgt_;
      op.stages_.push_back(sh);
    }
  }
  return op;
}

namespace {

void append_kron_image(const TensorOp::KronStage& ks, Field field, long col,
                       const Scalar& val,
                       std::vector<std::pair<long, Scalar>>& out) {
  // peel source digits right-to-left, collect the per-factor columns
  size_t n = ks.factors.size();
  std::vector<long> letters(n);
  long c = col;
  for (size_t k = n; k-- > 0;) {
    letters[k] = c % ks.factors[k].cols();
    c /= ks.factors[k].cols();
  }
  // enumerate the support of the tensor of factor columns
  struct Item {
    long row;
    Scalar coef;
  };
  std::vector<Item> acc{{0, val}};
  std::vector<Item> next;
  for (size_t k = 0; k < n; ++k) {
    const auto& fac = ks.factors[k];
    next.clear();
    if (fac.is_identity()) {
      for (auto& it : acc)
        next.push_back({it.row * fac.id_dim + letters[k], it.coef});
    } else {
      for (int i = 0; i < fac.mat.rows(); ++i) {
        const Scalar& m = fac.mat.at(i, static_cast<int>(letters[k]));
        if (m.is_zero())
          continue;
        for (auto& it : acc)
          next.push_back({it.row * fac.mat.rows() + i, it.coef * m});
      }
    }
    acc.swap(next);
    if (acc.empty())
      return;
  }
  (void)field;
  for (auto& it : acc)
    out.emplace_back(it.row, std::move(it.coef));
}

SVec collect_entries(std::vector<std::pair<long, Scalar>>& buf) {
  std::sort(buf.begin(), buf.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec v;
  v.e.reserve(buf.size());
  for (auto& [idx, val] : buf) {
    if (!v.e.empty() && v.e.back().first == static_cast<int>(idx)) {
      v.e.back().second += val;
      if (v.e.back().second.is_zero())
        v.e.pop_back();
    } else if (!val.is_zero()) {
      v.e.emplace_back(static_cast<int>(idx), std::move(val));
    }
  }
  return v;
}

} // namespace

SVec TensorOp::apply(const SVec& v) const {
  SVec cur = v;
  for (const auto& st : stages_) {
    if (cur.is_zero())
      return cur;
    if (std::holds_alternative<ShuffleStage>(st)) {
      const auto& sh = std::get<ShuffleStage>(st);
      std::vector<std::pair<long, Scalar>> buf;
      buf.reserve(cur.e.size());
      for (auto& [col, val] : cur.e)
        buf.emplace_back(sh.map(col), std::move(val));
      cur = collect_entries(buf);
    } else {
      const auto& ks = std::get<KronStage>(st);
      std::vector<std::pair<long, Scalar>> buf;
      for (const auto& [col, val] : cur.e)
        append_kron_image(ks, field_, col, val, buf);
      cur = collect_entries(buf);
    }
  }
  return cur;
}

Subspace TensorOp::apply(const Subspace& s) const {
  std::vector<SVec> rows;
  rows.reserve(s.rows().size());
  for (const auto& r : s.rows())
    rows.push_back(apply(r));
  return Subspace::from_rows(field_, static_cast<int>(tgt_), std::move(rows));
}

Matrix TensorOp::to_matrix() const {
  if (src_ > 65536 || tgt_ > 65536)
    fail(Errc::DimensionMismatch, "tensor op too large to materialize");
  Matrix m(field_, static_cast<int>(tgt_), static_cast<int>(src_));
  for (long j = 0; j < src_; ++j) {
    SVec img = apply(SVec::unit(static_cast<int>(j), Scalar::one(field_)));
    for (const auto& [row, val] : img.e)
      m.at(row, static_cast<int>(j)) = val;
  }
  return m;
}

bool TensorOp::is_identity_on_basis() const {
  if (src_ != tgt_)
    return false;
  for (long j = 0; j < src_; ++j) {
    SVec img = apply(SVec::unit(static_cast<int>(j), Scalar::one(field_)));
    if (img.e.size() != 1 || img.e[0].first != j || !img.e[0].second.is_one())
      return false;
  }
  return true;
}

Matrix interleave_matrix(Field f, int r, int dx, int dy) {
  return TensorOp::shuffle_op(f, r, dx, dy, false).to_matrix();
}

} // namespace qhom
