#include "qhom/products.hpp"

namespace qhom {

namespace {

long power(int base, int exp) {
  long p = 1;
  for (int i = 0; i < exp; ++i)
    p *= base;
  return p;
}

void require_same_session(const QuantumSpace& a, const QuantumSpace& b) {
  if (a.field() != b.field())
    fail(Errc::FieldMismatch, "product of spaces over different fields");
  if (a.cutoff() != b.cutoff())
    fail(Errc::DimensionMismatch, "product of spaces with different cutoffs");
}

/// K_d accumulated as the two-sided ideal generated by per-degree
/// contribution subspaces.
QuantumSpace close_filtration(Field f, std::vector<std::string> labels,
                              const std::vector<Subspace>& contribs, int cutoff) {
  int n = static_cast<int>(labels.size());
  std::vector<std::shared_ptr<Component>> comps;
  comps.reserve(cutoff + 1);
  comps.push_back(std::make_shared<Component>(
      Component::from_both(Subspace(f, 1), Subspace::full(f, 1))));
  if (cutoff >= 1)
    comps.push_back(std::make_shared<Component>(
        Component::from_both(Subspace(f, n), Subspace::full(f, n))));
  Subspace prev(f, n);
  Subspace v1 = Subspace::full(f, n);
  for (int d = 2; d <= cutoff; ++d) {
    std::vector<SVec> rows;
    Subspace left = v1.tensor(prev);
    Subspace right = prev.tensor(v1);
    rows.insert(rows.end(), left.rows().begin(), left.rows().end());
    rows.insert(rows.end(), right.rows().begin(), right.rows().end());
    if (d < static_cast<int>(contribs.size()))
      rows.insert(rows.end(), contribs[d].rows().begin(), contribs[d].rows().end());
    Subspace kd = Subspace::from_rows(f, static_cast<int>(power(n, d)), std::move(rows));
    comps.push_back(std::make_shared<Component>(Component::from_kernel(kd)));
    prev = std::move(kd);
  }
  return QuantumSpace::assemble(f, std::move(labels), std::move(comps));
}

} // namespace

std::vector<std::string> z_labels(int n_a, int m_b) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n_a) * m_b);
  for (int j = 1; j <= m_b; ++j)
    for (int i = 1; i <= n_a; ++i)
      labels.push_back("z" + std::to_string(i) + "_" + std::to_string(j));
  return labels;
}

QuantumSpace koszul_dual(const QuantumSpace& a) {
  if (!a.is_quadratic())
    fail(Errc::NonQuadratic, "Koszul dual needs a quadratic space");
  std::vector<std::string> labels;
  labels.reserve(a.gens());
  for (const auto& l : a.labels())
    labels.push_back("d" + l);
  std::vector<Subspace> contribs(3, Subspace(a.field(), 0));
  contribs[2] = a.kernel(2).annihilator();
  return close_filtration(a.field(), std::move(labels), contribs, a.cutoff());
}

QuantumSpace white_product(const QuantumSpace& a, const QuantumSpace& b) {
  require_same_session(a, b);
  Field f = a.field();
  int na = a.gens(), nb = b.gens();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(na) * nb);
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels())
      labels.push_back(la + "_" + lb);

  std::vector<std::shared_ptr<Component>> comps;
  comps.reserve(a.cutoff() + 1);
  for (int d = 0; d <= a.cutoff(); ++d) {
    long amb = power(na * nb, d);
    if (d <= 1) {
      comps.push_back(std::make_shared<Component>(Component::from_both(
          Subspace(f, static_cast<int>(amb)), Subspace::full(f, static_cast<int>(amb)))));
      continue;
    }
    // ann K_{AoB,d} = interleave(ann K_{A,d} (x) ann K_{B,d})
    TensorOp ilv = TensorOp::shuffle_op(f, d, na, nb, false);
    Subspace ann_d = ilv.apply(a.ann(d).tensor(b.ann(d)));
    comps.push_back(std::make_shared<Component>(Component::from_ann(std::move(ann_d))));
  }
  return QuantumSpace::assemble(f, std::move(labels), std::move(comps));
}

QuantumSpace black_product(const QuantumSpace& bdual, const QuantumSpace& a) {
  require_same_session(bdual, a);
  if (!bdual.is_quadratic() || !a.is_quadratic())
    fail(Errc::NonQuadratic, "black product needs quadratic spaces");
  Field f = a.field();
  int nd = bdual.gens(), na = a.gens();
  std::vector<Subspace> contribs(3, Subspace(f, 0));
  TensorOp ilv = TensorOp::shuffle_op(f, 2, nd, na, false);
  contribs[2] = ilv.apply(bdual.kernel(2).tensor(a.kernel(2)));
  return close_filtration(f, z_labels(na, nd), contribs, a.cutoff());
}

QuantumSpace triangle_product(const QuantumSpace& b, const QuantumSpace& a) {
  require_same_session(b, a);
  Field f = a.field();
  int m = b.gens(), n = a.gens();
  std::vector<Subspace> contribs;
  contribs.reserve(a.cutoff() + 1);
  contribs.emplace_back(f, 0);
  contribs.emplace_back(f, 0);
  for (int r = 2; r <= a.cutoff(); ++r) {
    // J_r-perp (x) I_r, interleaved into the z alphabet
    TensorOp ilv = TensorOp::shuffle_op(f, r, m, n, false);
    contribs.push_back(ilv.apply(b.ann(r).tensor(a.kernel(r))));
  }
  return close_filtration(f, z_labels(n, m), contribs, a.cutoff());
}

} // namespace qhom
