#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhom/tensor.hpp"

namespace qhom {

/// Degree-d slice of a quantum space: the kernel K_d of T(V1) -> A in
/// V1^{(x)d} together with its annihilator (the coordinates of A_d). Either
/// side may be computed lazily from the other; both are canonical.
class Component {
public:
  static Component from_kernel(Subspace k);
  static Component from_ann(Subspace a);
  static Component from_both(Subspace k, Subspace a);

  Field field() const { return field_; }
  int ambient() const { return ambient_; }
  int kernel_dim() const;
  int alg_dim() const { return ambient_ - kernel_dim(); }
  bool kernel_cached() const { return kernel_.has_value(); }
  bool ann_cached() const { return ann_.has_value(); }

  const Subspace& kernel() const;
  const Subspace& ann() const;

  /// Membership in K_d, decided against whichever side is cached.
  bool kernel_contains(const SVec& v) const;

private:
  Field field_ = Field::Q;
  int ambient_ = 0;
  mutable std::optional<Subspace> kernel_, ann_;
};

/// Conic quantum space: generators plus the kernel filtration of its
/// defining ideal up to the cutoff degree. Immutable after construction.
class QuantumSpace {
public:
  QuantumSpace() = default;

  static QuantumSpace free_space(Field f, std::vector<std::string> labels, int cutoff);
  /// The one-generator free space K - the unit for the white product.
  static QuantumSpace unit_space(Field f, int cutoff);
  /// relations: homogeneous vectors with their degrees, 2 <= degree <= cutoff.
  static QuantumSpace from_presentation(Field f, std::vector<std::string> labels,
                                        const std::vector<std::pair<int, SVec>>& relations,
                                        int cutoff);
  /// Internal assembly from per-degree components (degree 0..cutoff).
  static QuantumSpace assemble(Field f, std::vector<std::string> labels,
                               std::vector<std::shared_ptr<Component>> comps);

  Field field() const { return field_; }
  int gens() const { return n_; }
  int cutoff() const { return cutoff_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Component& component(int d) const;
  const Subspace& kernel(int d) const { return component(d).kernel(); }
  const Subspace& ann(int d) const { return component(d).ann(); }
  int alg_dim(int d) const { return component(d).alg_dim(); }
  std::vector<long> hilbert() const;

  /// Dimension of a minimal generating set of the ideal in degree d.
  int new_generators_dim(int d) const;
  bool is_quadratic() const;

  /// Structural equality of the kernel filtrations; labels are ignored.
  bool same_space(const QuantumSpace& o) const;

private:
  Field field_ = Field::Q;
  int n_ = 0;
  int cutoff_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::shared_ptr<Component>> comp_;
};

struct ClosureReport {
  bool ok = true;
  int degree = -1;
};

/// Checks the ideal-closure invariant V(x)K_{d-1} + K_{d-1}(x)V <= K_d on
/// the annihilator side, degree by degree.
ClosureReport check_ideal_closure(const QuantumSpace& a);

/// Degree-1 data of an algebra map between conic spaces; the degree-d
/// action is the d-fold Kronecker power.
struct GradedMap {
  QuantumSpace source, target;
  Matrix f1; // target gens x source gens

  TensorOp degree_op(int d) const;
};

struct MorphismReport {
  bool ok = true;
  int degree = -1;
  SVec witness; // source kernel vector whose image escapes the target kernel
};

MorphismReport check_morphism(const GradedMap& f);
GradedMap compose(const GradedMap& f, const GradedMap& g); // f after g

/// The subalgebra of H generated by a subspace of its degree-1 part,
/// expressed as a quantum space on that subspace.
QuantumSpace generated_subspace(const QuantumSpace& h, const Subspace& gens);

} // namespace qhom
