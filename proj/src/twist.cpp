#include "qhom/twist.hpp"

namespace qhom {

Primitive Primitive::identity(Field f, int letter_dim, int cutoff) {
  Primitive p;
  p.field_ = f;
  p.n_ = letter_dim;
  p.theta_.reserve(cutoff + 1);
  long dim = 1;
  for (int d = 0; d <= cutoff; ++d) {
    TensorOp id = TensorOp::identity(f, dim);
    p.theta_.push_back({id, id});
    dim *= letter_dim;
  }
  return p;
}

Primitive Primitive::from_sigma(const Matrix& sigma, int cutoff) {
  if (sigma.rows() != sigma.cols())
    fail(Errc::SingularMatrix, "sigma must be square");
  Field f = sigma.field();
  int n = sigma.rows();
  Matrix sigma_inv = sigma.inverse(); // throws SingularMatrix

  // per-factor powers sigma^{-k}, k = 0..cutoff-1
  std::vector<Matrix> inv_pow{Matrix::identity(f, n)};
  std::vector<Matrix> fwd_pow{Matrix::identity(f, n)};
  for (int k = 1; k < cutoff; ++k) {
    inv_pow.push_back(inv_pow.back() * sigma_inv);
    fwd_pow.push_back(fwd_pow.back() * sigma);
  }

  Primitive p;
  p.field_ = f;
  p.n_ = n;
  p.theta_.reserve(cutoff + 1);
  for (int d = 0; d <= cutoff; ++d) {
    if (d == 0) {
      p.theta_.push_back({TensorOp::identity(f, 1), TensorOp::identity(f, 1)});
      continue;
    }
    std::vector<Matrix> fw, bw;
    fw.reserve(d);
    bw.reserve(d);
    for (int k = 0; k < d; ++k) {
      fw.push_back(inv_pow[k]);
      bw.push_back(fwd_pow[k]);
    }
    p.theta_.push_back({TensorOp::kron_op(f, std::move(fw)),
                        TensorOp::kron_op(f, std::move(bw))});
  }
  return p;
}

Primitive Primitive::from_ops(Field f, int letter_dim, std::vector<DOp> ops) {
  Primitive p;
  p.field_ = f;
  p.n_ = letter_dim;
  p.theta_ = std::move(ops);
  return p;
}

const TensorOp& Primitive::op(int d) const {
  if (d < 0 || d >= static_cast<int>(theta_.size()))
    fail(Errc::BadDegree, "primitive degree out of range");
  return theta_[d].fwd;
}

const TensorOp& Primitive::op_inv(int d) const {
  if (d < 0 || d >= static_cast<int>(theta_.size()))
    fail(Errc::BadDegree, "primitive degree out of range");
  return theta_[d].inv;
}

bool Primitive::same_action(const Primitive& o) const {
  if (field_ != o.field_ || n_ != o.n_ || cutoff() != o.cutoff())
    return false;
  for (int d = 2; d <= cutoff(); ++d) {
    long dim = op(d).src_dim();
    for (long j = 0; j < dim; ++j) {
      SVec u = SVec::unit(static_cast<int>(j), Scalar::one(field_));
      if (!(op(d).apply(u) == o.op(d).apply(u)))
        return false;
    }
  }
  return true;
}

bool Primitive::is_identity() const {
  for (int d = 2; d <= cutoff(); ++d)
    if (!op(d).is_identity_on_basis())
      return false;
  return true;
}

Primitive invert(const Primitive& p) {
  std::vector<Primitive::DOp> ops;
  ops.reserve(p.cutoff() + 1);
  for (int d = 0; d <= p.cutoff(); ++d)
    ops.push_back({p.op_inv(d), p.op(d)});
  return Primitive::from_ops(p.field(), p.letter_dim(), std::move(ops));
}

Primitive dualize(const Primitive& p) {
  std::vector<Primitive::DOp> ops;
  ops.reserve(p.cutoff() + 1);
  for (int d = 0; d <= p.cutoff(); ++d)
    ops.push_back({p.op(d).transpose(), p.op_inv(d).transpose()});
  return Primitive::from_ops(p.field(), p.letter_dim(), std::move(ops));
}

Primitive join(const Primitive& l, const Primitive& r) {
  if (l.field() != r.field())
    fail(Errc::FieldMismatch, "join of primitives over different fields");
  if (l.cutoff() != r.cutoff())
    fail(Errc::DimensionMismatch, "join of primitives with different cutoffs");
  Field f = l.field();
  int nl = l.letter_dim(), nr = r.letter_dim();
  std::vector<Primitive::DOp> ops;
  ops.reserve(l.cutoff() + 1);
  for (int d = 0; d <= l.cutoff(); ++d) {
    TensorOp split = TensorOp::shuffle_op(f, d, nl, nr, true);
    TensorOp group = TensorOp::shuffle_op(f, d, nl, nr, false);
    ops.push_back({split.then(TensorOp::tensor(l.op(d), r.op(d))).then(group),
                   split.then(TensorOp::tensor(l.op_inv(d), r.op_inv(d))).then(group)});
  }
  return Primitive::from_ops(f, nl * nr, std::move(ops));
}

Primitive compose_primitives(const Primitive& outer, const Primitive& inner) {
  if (outer.letter_dim() != inner.letter_dim() || outer.cutoff() != inner.cutoff())
    fail(Errc::DimensionMismatch, "composite of mismatched primitives");
  std::vector<Primitive::DOp> ops;
  ops.reserve(outer.cutoff() + 1);
  for (int d = 0; d <= outer.cutoff(); ++d)
    ops.push_back({inner.op(d).then(outer.op(d)), outer.op_inv(d).then(inner.op_inv(d))});
  return Primitive::from_ops(outer.field(), outer.letter_dim(), std::move(ops));
}

Matrix coboundary(const Primitive& p, int r, int s) {
  if (r < 0 || s < 0 || r + s > p.cutoff())
    fail(Errc::BadDegree, "coboundary block outside tracked degrees");
  TensorOp split_inv = TensorOp::tensor(p.op_inv(r), p.op_inv(s));
  return split_inv.then(p.op(r + s)).to_matrix();
}

QuantumSpace twist_space(const QuantumSpace& a, const Primitive& theta) {
  if (theta.letter_dim() != a.gens())
    fail(Errc::DimensionMismatch, "primitive letter dimension does not match the space");
  if (theta.cutoff() < a.cutoff())
    fail(Errc::BadDegree, "primitive tracks fewer degrees than the space");
  Field f = a.field();
  std::vector<std::shared_ptr<Component>> comps;
  comps.reserve(a.cutoff() + 1);
  for (int d = 0; d <= a.cutoff(); ++d) {
    const Component& c = a.component(d);
    if (d <= 1 || (c.kernel_cached() && c.kernel().is_zero())) {
      comps.push_back(std::make_shared<Component>(
          Component::from_both(Subspace(f, c.ambient()), Subspace::full(f, c.ambient()))));
      continue;
    }
    // twist whichever representations are already cached
    bool twist_kernel = c.kernel_cached();
    bool twist_ann = c.ann_cached() || !twist_kernel;
    Subspace k2, a2;
    if (twist_kernel)
      k2 = theta.op(d).apply(c.kernel());
    if (twist_ann)
      a2 = theta.dual_inv_op(d).apply(c.ann());
    if (twist_kernel && twist_ann)
      comps.push_back(std::make_shared<Component>(
          Component::from_both(std::move(k2), std::move(a2))));
    else if (twist_kernel)
      comps.push_back(std::make_shared<Component>(Component::from_kernel(std::move(k2))));
    else
      comps.push_back(std::make_shared<Component>(Component::from_ann(std::move(a2))));
  }
  QuantumSpace twisted = QuantumSpace::assemble(f, a.labels(), std::move(comps));
  ClosureReport cl = check_ideal_closure(twisted);
  if (!cl.ok)
    fail(Errc::NotAdmissible,
         "twisted kernels stop being an ideal at degree " + std::to_string(cl.degree),
         cl.degree);
  return twisted;
}

AdmissibilityReport check_admissible(const QuantumSpace& a, const Primitive& theta) {
  AdmissibilityReport rep;
  try {
    twist_space(a, theta);
  } catch (const Error& e) {
    if (e.code() != Errc::NotAdmissible)
      throw;
    rep.primal_ok = false;
    rep.primal_degree = e.degree();
  }
  try {
    twist_space(a, invert(theta));
  } catch (const Error& e) {
    if (e.code() != Errc::NotAdmissible)
      throw;
    rep.dual_ok = false;
    rep.dual_degree = e.degree();
  }
  return rep;
}

Primitive build_omega(const Primitive& theta_a, const Primitive& theta_b) {
  Primitive theta_b_dual = dualize(invert(theta_b));
  Primitive id_b = Primitive::identity(theta_b.field(), theta_b.letter_dim(), theta_b.cutoff());
  return join(join(theta_b_dual, theta_a), id_b);
}

} // namespace qhom
