#pragma once

#include <variant>
#include <vector>

#include "qhom/linalg.hpp"

namespace qhom {

/// Coordinate bookkeeping for a tensor product of factors. Indexing is
/// big-endian: the leftmost factor is the most significant digit, letters
/// are 1-based.
struct TensorShape {
  std::vector<int> dims;

  static TensorShape power(int dim, int degree) {
    return TensorShape{std::vector<int>(static_cast<size_t>(degree), dim)};
  }
  int degree() const { return static_cast<int>(dims.size()); }
  long total() const {
    long t = 1;
    for (int d : dims)
      t *= d;
    return t;
  }
  long word_index(const std::vector<int>& word) const;
  std::vector<int> index_word(long index) const;
};

/// Kronecker product of dense matrices in the big-endian convention.
Matrix kron(const std::vector<Matrix>& factors);

/// Dual pairing <f, x> = sum_w f_w x_w, i.e. <f1x...xfd, v1x...xvd> =
/// prod <fk, vk> extended bilinearly with no factor reversal.
Scalar pairing(Field f, const SVec& fun, const SVec& vec);

/// Linear map between tensor-power coordinate spaces, kept as a pipeline of
/// structural stages so degree-d operators apply to sparse vectors without
/// ever being materialized. Stages are applied first-to-last.
class TensorOp {
public:
  struct Factor {
    // dense block or an identity of the given dimension
    Matrix mat;
    long id_dim = 0;
    bool is_identity() const { return id_dim > 0; }
    long rows() const { return is_identity() ? id_dim : mat.rows(); }
    long cols() const { return is_identity() ? id_dim : mat.cols(); }
    static Factor identity(long d) { return Factor{Matrix(), d}; }
    static Factor dense(Matrix m) { return Factor{std::move(m), 0}; }
  };
  struct KronStage {
    std::vector<Factor> factors;
  };
  /// The interleaving shuffle on r pairs of letters, optionally embedded in
  /// a larger product with bystander dimensions on either side.
  struct ShuffleStage {
    int r = 0, dx = 1, dy = 1;
    bool inverse = false; // false: X^r (x) Y^r -> (X (x) Y)^r
    long left = 1, right = 1;
    long map(long idx) const;
  };
  using Stage = std::variant<KronStage, ShuffleStage>;

  TensorOp() : field_(Field::Q), src_(1), tgt_(1) {}

  static TensorOp identity(Field f, long dim);
  static TensorOp kron_op(Field f, std::vector<Matrix> factors);
  static TensorOp kron_op(Field f, std::vector<Factor> factors);
  static TensorOp shuffle_op(Field f, int r, int dx, int dy, bool inverse);
  static TensorOp dense_op(Matrix m);

  Field field() const { return field_; }
  long src_dim() const { return src_; }
  long tgt_dim() const { return tgt_; }

  /// Composition: this first, then next.
  TensorOp then(const TensorOp& next) const;
  TensorOp transpose() const;
  TensorOp inverse() const; // requires all dense factors square invertible
  static TensorOp tensor(const TensorOp& a, const TensorOp& b);

  SVec apply(const SVec& v) const;
  Subspace apply(const Subspace& s) const;
  Matrix to_matrix() const; // small dimensions only

  bool is_identity_on_basis() const;

private:
  Field field_;
  long src_, tgt_;
  std::vector<Stage> stages_;
};

/// Permutation matrix of the interleaving x1..xr (x) y1..yr -> (x1y1)..(xryr).
Matrix interleave_matrix(Field f, int r, int dx, int dy);

} // namespace qhom
