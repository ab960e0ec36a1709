#pragma once

#include "qhom/qspace.hpp"

namespace qhom {

/// Invertible degree-indexed family theta_d on V^{(x)d} normalized by
/// theta_0 = 1, theta_1 = id. Forward and inverse actions are both kept in
/// structural form so huge degree-d blocks never have to be inverted
/// numerically (or materialized).
class Primitive {
public:
  struct DOp {
    TensorOp fwd, inv;
  };

  static Primitive identity(Field f, int letter_dim, int cutoff);
  /// theta_d = sigma^0 (x) sigma^{-1} (x) ... (x) sigma^{1-d}.
  static Primitive from_sigma(const Matrix& sigma, int cutoff);
  static Primitive from_ops(Field f, int letter_dim, std::vector<DOp> ops);

  Field field() const { return field_; }
  int letter_dim() const { return n_; }
  int cutoff() const { return static_cast<int>(theta_.size()) - 1; }

  const TensorOp& op(int d) const;
  const TensorOp& op_inv(int d) const;
  /// Transpose action, mapping dual coordinates forward.
  TensorOp dual_op(int d) const { return op(d).transpose(); }
  /// Inverse transpose: the image of an annihilator under theta_d is the
  /// dual_inv_op image, ann(theta(K)) = theta^{-T}(ann K).
  TensorOp dual_inv_op(int d) const { return op_inv(d).transpose(); }

  /// Extensional equality up to the given degree, decided on basis vectors.
  bool same_action(const Primitive& o) const;
  bool is_identity() const;

private:
  Field field_ = Field::Q;
  int n_ = 0;
  std::vector<DOp> theta_;
};

Primitive invert(const Primitive& p);
Primitive dualize(const Primitive& p);
/// On (X (x) Y)^{(x)d}: interleave . (theta_l (x) theta_r) . interleave^-1.
Primitive join(const Primitive& l, const Primitive& r);
/// Degreewise composite {outer_d . inner_d}.
Primitive compose_primitives(const Primitive& outer, const Primitive& inner);

/// Coboundary block theta_{r+s} . (theta_r (x) theta_s)^{-1} on V^{(x)(r+s)}.
Matrix coboundary(const Primitive& p, int r, int s);

/// Twisted space with K'_d = theta_d(K_d); throws NotAdmissible when the
/// image filtration stops being a two-sided ideal.
QuantumSpace twist_space(const QuantumSpace& a, const Primitive& theta);

/// Operational admissibility report: primal closure of {theta_d(K_d)} plus
/// the same for the inverse family (the twist and the untwist). The full
/// "2nd" level additionally wants the coHom coevaluation check, which lives
/// one module up.
struct AdmissibilityReport {
  bool primal_ok = true;
  int primal_degree = -1;
  bool dual_ok = true;
  int dual_degree = -1;
  bool second_ok() const { return primal_ok && dual_ok; }
};

AdmissibilityReport check_admissible(const QuantumSpace& a, const Primitive& theta);

/// The factorizable cochain primitive on (B1* (x) A1 (x) B1):
/// join(join(theta_B^!, theta_A), id) with theta^! the inverse transpose.
Primitive build_omega(const Primitive& theta_a, const Primitive& theta_b);

} // namespace qhom
