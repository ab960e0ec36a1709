#include "qhom/qspace.hpp"

#include <algorithm>

namespace qhom {

// ------------------------------------------------------------ Component

Component Component::from_kernel(Subspace k) {
  Component c;
  c.field_ = k.field();
  c.ambient_ = k.ambient();
  c.kernel_ = std::move(k);
  return c;
}

Component Component::from_ann(Subspace a) {
  Component c;
  c.field_ = a.field();
  c.ambient_ = a.ambient();
  c.ann_ = std::move(a);
  return c;
}

Component Component::from_both(Subspace k, Subspace a) {
  Component c;
  c.field_ = k.field();
  c.ambient_ = k.ambient();
  c.kernel_ = std::move(k);
  c.ann_ = std::move(a);
  return c;
}

int Component::kernel_dim() const {
  if (kernel_)
    return kernel_->dim();
  return ambient_ - ann_->dim();
}

const Subspace& Component::kernel() const {
  if (!kernel_)
    kernel_ = ann_->annihilator();
  return *kernel_;
}

const Subspace& Component::ann() const {
  if (!ann_)
    ann_ = kernel_->annihilator();
  return *ann_;
}

bool Component::kernel_contains(const SVec& v) const {
  if (ann_) {
    for (const auto& a : ann_->rows())
      if (!dot(field_, a, v).is_zero())
        return false;
    return true;
  }
  return kernel_->contains(v);
}

// ---------------------------------------------------------- QuantumSpace

namespace {

long power(int base, int exp) {
  long p = 1;
  for (int i = 0; i < exp; ++i)
    p *= base;
  return p;
}

std::shared_ptr<Component> zero_component(Field f, int ambient) {
  return std::make_shared<Component>(
      Component::from_both(Subspace(f, ambient), Subspace::full(f, ambient)));
}

} // namespace

QuantumSpace QuantumSpace::assemble(Field f, std::vector<std::string> labels,
                                    std::vector<std::shared_ptr<Component>> comps) {
  QuantumSpace a;
  a.field_ = f;
  a.n_ = static_cast<int>(labels.size());
  a.cutoff_ = static_cast<int>(comps.size()) - 1;
  a.labels_ = std::move(labels);
  a.comp_ = std::move(comps);
  if (a.cutoff_ < 1)
    fail(Errc::BadDegree, "cutoff must be at least 1");
  if (a.comp_[0]->kernel_dim() != 0 || a.comp_[1]->kernel_dim() != 0)
    fail(Errc::BadDegree, "conic space requires K_0 = K_1 = 0");
  return a;
}

QuantumSpace QuantumSpace::free_space(Field f, std::vector<std::string> labels, int cutoff) {
  int n = static_cast<int>(labels.size());
  std::vector<std::shared_ptr<Component>> comps;
  comps.reserve(cutoff + 1);
  for (int d = 0; d <= cutoff; ++d)
    comps.push_back(zero_component(f, static_cast<int>(power(n, d))));
  return assemble(f, std::move(labels), std::move(comps));
}

QuantumSpace QuantumSpace::unit_space(Field f, int cutoff) {
  return free_space(f, {"e"}, cutoff);
}

QuantumSpace QuantumSpace::from_presentation(Field f, std::vector<std::string> labels,
                                             const std::vector<std::pair<int, SVec>>& relations,
                                             int cutoff) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<SVec>> gens(cutoff + 1);
  for (const auto& [deg, vec] : relations) {
    if (deg < 2)
      fail(Errc::BadDegree, "relation of degree " + std::to_string(deg) +
                                " (conic spaces need degree >= 2)");
    if (deg > cutoff)
      fail(Errc::BadDegree, "relation degree " + std::to_string(deg) +
                                " exceeds cutoff " + std::to_string(cutoff));
    gens[deg].push_back(vec);
  }

  std::vector<std::shared_ptr<Component>> comps;
  comps.reserve(cutoff + 1);
  comps.push_back(zero_component(f, 1));
  if (cutoff >= 1)
    comps.push_back(zero_component(f, n));
  Subspace prev(f, n); // K_1 = 0
  Subspace v1 = Subspace::full(f, n);
  for (int d = 2; d <= cutoff; ++d) {
    std::vector<SVec> rows;
    Subspace left = v1.tensor(prev);
    Subspace right = prev.tensor(v1);
    rows.insert(rows.end(), left.rows().begin(), left.rows().end());
    rows.insert(rows.end(), right.rows().begin(), right.rows().end());
    rows.insert(rows.end(), gens[d].begin(), gens[d].end());
    Subspace kd = Subspace::from_rows(f, static_cast<int>(power(n, d)), std::move(rows));
    comps.push_back(std::make_shared<Component>(Component::from_kernel(kd)));
    prev = std::move(kd);
  }
  return assemble(f, std::move(labels), std::move(comps));
}

const Component& QuantumSpace::component(int d) const {
  if (d < 0 || d > cutoff_)
    fail(Errc::BadDegree, "degree " + std::to_string(d) + " outside tracked range 0.." +
                              std::to_string(cutoff_));
  return *comp_[d];
}

std::vector<long> QuantumSpace::hilbert() const {
  std::vector<long> dims;
  dims.reserve(cutoff_ + 1);
  for (int d = 0; d <= cutoff_; ++d)
    dims.push_back(alg_dim(d));
  return dims;
}

int QuantumSpace::new_generators_dim(int d) const {
  if (d < 2)
    return 0;
  const Subspace& kd = kernel(d);
  Subspace closure = Subspace::full(field_, n_).tensor(kernel(d - 1))
                         .sum(kernel(d - 1).tensor(Subspace::full(field_, n_)));
  return kd.dim() - closure.dim();
}

bool QuantumSpace::is_quadratic() const {
  for (int d = 3; d <= cutoff_; ++d)
    if (new_generators_dim(d) != 0)
      return false;
  return true;
}

bool QuantumSpace::same_space(const QuantumSpace& o) const {
  if (field_ != o.field_ || n_ != o.n_ || cutoff_ != o.cutoff_)
    return false;
  for (int d = 2; d <= cutoff_; ++d) {
    const Component& x = component(d);
    const Component& y = o.component(d);
    if (x.alg_dim() != y.alg_dim())
      return false;
    // compare on whichever side both have cached, defaulting to annihilators
    if (x.kernel_cached() && y.kernel_cached()) {
      if (!(x.kernel() == y.kernel()))
        return false;
    } else if (!(x.ann() == y.ann())) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------- closure check

namespace {

// v in coords of V^{(x)d}; slice at the first letter: v = sum e_i (x) v_i
std::vector<SVec> left_slices(const SVec& v, int n, long inner) {
  std::vector<SVec> slices(n);
  for (const auto& [col, val] : v.e)
    slices[col / inner].e.emplace_back(static_cast<int>(col % inner), val);
  return slices;
}

// slice at the last letter: v = sum v_j (x) e_j
std::vector<SVec> right_slices(const SVec& v, int n) {
  std::vector<SVec> slices(n);
  for (const auto& [col, val] : v.e)
    slices[col % n].e.emplace_back(col / n, val);
  return slices;
}

} // namespace

ClosureReport check_ideal_closure(const QuantumSpace& a) {
  int n = a.gens();
  for (int d = 3; d <= a.cutoff(); ++d) {
    // V(x)K_{d-1} <= K_d and K_{d-1}(x)V <= K_d, tested on annihilators:
    // ann K_d must sit inside V*(x)ann K_{d-1} and ann K_{d-1}(x)V*.
    const Subspace& small = a.ann(d - 1);
    long inner = 1;
    for (int k = 0; k < d - 1; ++k)
      inner *= n;
    for (const auto& row : a.ann(d).rows()) {
      for (auto& s : left_slices(row, n, inner))
        if (!small.contains(s))
          return {false, d};
      for (auto& s : right_slices(row, n))
        if (!small.contains(s))
          return {false, d};
    }
  }
  return {};
}

// ----------------------------------------------------------- GradedMap

TensorOp GradedMap::degree_op(int d) const {
  Field f = f1.field();
  if (d == 0)
    return TensorOp::identity(f, 1);
  std::vector<Matrix> factors(static_cast<size_t>(d), f1);
  return TensorOp::kron_op(f, std::move(factors));
}

MorphismReport check_morphism(const GradedMap& f) {
  if (f.f1.cols() != f.source.gens() || f.f1.rows() != f.target.gens())
    fail(Errc::DimensionMismatch, "degree-1 block shape does not match the spaces");
  int d_max = std::min(f.source.cutoff(), f.target.cutoff());
  for (int d = 2; d <= d_max; ++d) {
    if (f.source.kernel(d).is_zero())
      continue;
    TensorOp op = f.degree_op(d);
    const Component& tgt = f.target.component(d);
    for (const auto& row : f.source.kernel(d).rows()) {
      SVec img = op.apply(row);
      if (!tgt.kernel_contains(img))
        return {false, d, row};
    }
  }
  return {};
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (!f.source.same_space(g.target))
    fail(Errc::EndpointMismatch, "composition endpoints do not match");
  return GradedMap{g.source, f.target, f.f1 * g.f1};
}

// --------------------------------------------------- generated subspace

QuantumSpace generated_subspace(const QuantumSpace& h, const Subspace& gens) {
  if (gens.ambient() != h.gens())
    fail(Errc::DimensionMismatch, "generators do not live in the degree-1 part");
  Field f = h.field();
  int k = gens.dim();
  Matrix proj = gens.basis_matrix(); // k x n_H, rows are the new letters

  std::vector<std::shared_ptr<Component>> comps;
  comps.reserve(h.cutoff() + 1);
  for (int d = 0; d <= h.cutoff(); ++d) {
    long amb = power(k, d);
    if (d <= 1) {
      comps.push_back(zero_component(f, static_cast<int>(amb)));
      continue;
    }
    // ann K_sub,d = E^T(ann K_{H,d}) with E the d-fold embedding of gens
    TensorOp pull = TensorOp::kron_op(f, std::vector<Matrix>(static_cast<size_t>(d), proj));
    std::vector<SVec> rows;
    rows.reserve(h.ann(d).rows().size());
    for (const auto& r : h.ann(d).rows())
      rows.push_back(pull.apply(r));
    Subspace ann_sub = Subspace::from_rows(f, static_cast<int>(amb), std::move(rows));
    comps.push_back(std::make_shared<Component>(Component::from_ann(std::move(ann_sub))));
  }

  std::vector<std::string> labels;
  labels.reserve(k);
  for (int i = 1; i <= k; ++i)
    labels.push_back("g" + std::to_string(i));
  return QuantumSpace::assemble(f, std::move(labels), std::move(comps));
}

} // namespace qhom
