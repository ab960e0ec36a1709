#include "qhom/cohom.hpp"

namespace qhom {

namespace {

long power(int base, int exp) {
  long p = 1;
  for (int i = 0; i < exp; ++i)
    p *= base;
  return p;
}

TensorOp kron_power(Field f, const Matrix& m, int d) {
  if (d == 0)
    return TensorOp::identity(f, 1);
  return TensorOp::kron_op(f, std::vector<Matrix>(static_cast<size_t>(d), m));
}

} // namespace

// -------------------------------------------------------------- Diagram

Matrix Diagram::phi1() const {
  Field f = a.field();
  int n = a.gens(), m = b.gens(), nh = h.gens();
  Matrix phi(f, nh * m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (const auto& [hl, c] : table[i][j].e)
        phi.at(hl * m + j, i) += c;
  return phi;
}

Subspace Diagram::generator_span() const {
  std::vector<SVec> rows;
  for (const auto& ti : table)
    for (const auto& v : ti)
      rows.push_back(v);
  return Subspace::from_rows(a.field(), h.gens(), std::move(rows));
}

QuantumSpace functor_image(const Diagram& d) {
  return generated_subspace(d.h, d.generator_span());
}

Diagram unit_diagram(const QuantumSpace& a) {
  Diagram d;
  d.a = a;
  d.b = a;
  d.h = QuantumSpace::unit_space(a.field(), a.cutoff());
  d.table.assign(a.gens(), std::vector<SVec>(a.gens()));
  for (int i = 0; i < a.gens(); ++i)
    d.table[i][i] = SVec::unit(0, Scalar::one(a.field()));
  return d;
}

SVec coords_in_basis(const Subspace& basis, const SVec& v) {
  SVec res = v;
  SVec coords;
  for (int t = 0; t < basis.dim(); ++t) {
    const SVec& row = basis.rows()[t];
    const Scalar* c = res.at(row.lead());
    if (c) {
      Scalar coeff = *c;
      axpy(res, coeff.negate(), row);
      coords.e.emplace_back(t, std::move(coeff));
    }
  }
  if (!res.is_zero())
    fail(Errc::DimensionMismatch, "vector does not lie in the subspace");
  return coords;
}

// ---------------------------------------------------------- transport

OmegaTransport transport_omega(const Diagram& d, const Primitive& theta_a,
                               const Primitive& theta_b) {
  Field f = d.a.field();
  int n = d.a.gens(), m = d.b.gens();
  int cutoff = d.a.cutoff();
  Subspace gens = d.generator_span();
  int k = gens.dim();

  // the z-block of the cochain, on (B* (x) A)-letters
  Primitive chi = join(dualize(invert(theta_b)), theta_a);

  OmegaTransport tr;
  // pi_1 : z_(j,i) -> coordinates of h_i^j in the generated letters
  tr.pi1 = Matrix(f, k, m * n);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      SVec coords = coords_in_basis(gens, d.table[i][j]);
      for (const auto& [t, c] : coords.e)
        tr.pi1.at(t, j * n + i) = c;
    }

  // section through the pivot columns of pi_1
  auto [rank, red] = rref(tr.pi1);
  if (rank != k)
    fail(Errc::DimensionMismatch, "table does not span the generated letters");
  std::vector<int> piv;
  for (int r = 0; r < red.rows(); ++r)
    piv.push_back(red.row_svec(r).lead());
  Matrix restricted(f, k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      restricted.at(r, c) = tr.pi1.at(r, piv[c]);
  Matrix rest_inv = restricted.inverse();
  Matrix s1(f, m * n, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r)
      s1.at(piv[r], c) = rest_inv.at(r, c);

  // kernel of pi_1 and stability of the cochain on it, degree by degree
  Subspace ker_pi = Subspace::from_matrix(tr.pi1.transpose()).annihilator();
  std::vector<Primitive::DOp> ops;
  ops.push_back({TensorOp::identity(f, 1), TensorOp::identity(f, 1)});
  if (cutoff >= 1)
    ops.push_back({TensorOp::identity(f, k), TensorOp::identity(f, k)});
  for (int deg = 2; deg <= cutoff && tr.stable; ++deg) {
    TensorOp pi_d = kron_power(f, tr.pi1, deg);
    if (!ker_pi.is_zero()) {
      for (int pos = 0; pos < deg && tr.stable; ++pos) {
        Subspace block = Subspace::full(f, static_cast<int>(power(m * n, pos)))
                             .tensor(ker_pi)
                             .tensor(Subspace::full(
                                 f, static_cast<int>(power(m * n, deg - 1 - pos))));
        for (const auto& row : block.rows()) {
          if (!pi_d.apply(chi.op(deg).apply(row)).is_zero()) {
            tr.stable = false;
            tr.fail_degree = deg;
            break;
          }
        }
      }
    }
    if (!tr.stable)
      break;
    TensorOp s_d = kron_power(f, s1, deg);
    ops.push_back({s_d.then(chi.op(deg)).then(pi_d),
                   s_d.then(chi.op_inv(deg)).then(pi_d)});
  }
  if (tr.stable)
    tr.transported = Primitive::from_ops(f, k, std::move(ops));
  return tr;
}

// ------------------------------------------------------- check_in_omega

DiagramReport check_in_omega(const Diagram& d, const Primitive& theta_a,
                             const Primitive& theta_b) {
  Field f = d.a.field();
  int n = d.a.gens(), m = d.b.gens();
  int cutoff = d.a.cutoff();
  DiagramReport rep;

  OmegaTransport tr = transport_omega(d, theta_a, theta_b);
  rep.transport_ok = tr.stable;
  rep.transport_degree = tr.fail_degree;
  if (!tr.stable)
    return rep;
  rep.has_transported = true;
  rep.transported = tr.transported;

  QuantumSpace fsub = functor_image(d);
  QuantumSpace w = white_product(fsub, d.b);
  Primitive omega_w = join(tr.transported, Primitive::identity(f, m, cutoff));

  QuantumSpace w_twisted;
  try {
    w_twisted = twist_space(w, invert(omega_w));
    rep.admissible_ok = true;
  } catch (const Error& e) {
    if (e.code() != Errc::NotAdmissible)
      throw;
    rep.admissible_degree = e.degree();
    return rep;
  }

  // phi in the generated letters: a_i -> sum_j pi(h_i^j) (x) b_j
  int k = fsub.gens();
  Matrix phi_f(f, k * m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int t = 0; t < k; ++t)
        if (!tr.pi1.at(t, j * n + i).is_zero())
          phi_f.at(t * m + j, i) = tr.pi1.at(t, j * n + i);

  rep.morphism_ok = true;
  for (int deg = 2; deg <= cutoff && rep.morphism_ok; ++deg) {
    if (d.a.kernel(deg).is_zero())
      continue;
    TensorOp op = kron_power(f, phi_f, deg);
    for (const auto& row : d.a.kernel(deg).rows()) {
      if (!w_twisted.component(deg).kernel_contains(op.apply(row))) {
        rep.morphism_ok = false;
        rep.morphism_degree = deg;
        rep.witness = row;
        break;
      }
    }
  }
  return rep;
}

// ----------------------------------------------------------- CohomObject

Diagram CohomObject::coevaluation_diagram() const {
  Diagram d;
  d.a = a;
  d.b = b;
  d.h = underlying;
  int n = a.gens(), m = b.gens();
  d.table.assign(n, std::vector<SVec>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      d.table[i][j] = SVec::unit(j * n + i, Scalar::one(a.field()));
  return d;
}

CohomObject build_cohom(const QuantumSpace& b, const QuantumSpace& a,
                        const Primitive& theta_a, const Primitive& theta_b) {
  AdmissibilityReport adm_a = check_admissible(a, theta_a);
  if (!adm_a.second_ok())
    fail(Errc::NotAdmissible, "theta_A is not admissible for the source space",
         adm_a.primal_ok ? adm_a.dual_degree : adm_a.primal_degree);
  AdmissibilityReport adm_b = check_admissible(b, theta_b);
  if (!adm_b.second_ok())
    fail(Errc::NotAdmissible, "theta_B is not admissible for the coacting space",
         adm_b.primal_ok ? adm_b.dual_degree : adm_b.primal_degree);

  CohomObject c;
  c.a = a;
  c.b = b;
  c.theta_a = theta_a;
  c.theta_b = theta_b;
  c.untwisted = triangle_product(b, a);

  Primitive chi = join(dualize(invert(theta_b)), theta_a);
  QuantumSpace route1 = twist_space(c.untwisted, chi);
  QuantumSpace route2 =
      triangle_product(twist_space(b, theta_b), twist_space(a, theta_a));
  if (!route1.same_space(route2))
    fail(Errc::ConstructionMismatch,
         "twisted triangle and triangle of twists disagree");

  c.underlying = route1;
  c.omega = build_omega(theta_a, theta_b);
  return c;
}

bool coevaluation_check(const CohomObject& c) {
  Field f = c.a.field();
  int cutoff = c.a.cutoff();
  QuantumSpace w = white_product(c.underlying, c.b);
  Matrix phi_z = c.coevaluation_diagram().phi1();

  // delta_r = omega_r . (plain z-substitution at degree r)
  for (int r = 2; r <= cutoff; ++r) {
    if (c.a.kernel(r).is_zero())
      continue;
    TensorOp sub = kron_power(f, phi_z, r);
    for (const auto& row : c.a.kernel(r).rows()) {
      SVec img = c.omega.op(r).apply(sub.apply(row));
      if (!w.component(r).kernel_contains(img))
        return false;
    }
  }

  // untwisting identity ((B_t |> A_t) o B)_omega = (B |> A) o B
  QuantumSpace lhs = twist_space(w, invert(c.omega));
  QuantumSpace rhs = white_product(c.untwisted, c.b);
  return lhs.same_space(rhs);
}

GradedMap counit(const CohomObject& c) {
  if (!c.a.same_space(c.b))
    fail(Errc::EndpointMismatch, "counit needs an end object (B = A)");
  Field f = c.a.field();
  int n = c.a.gens();
  QuantumSpace unit = QuantumSpace::unit_space(f, c.a.cutoff());
  Matrix eps(f, 1, n * n);
  for (int i = 0; i < n; ++i)
    eps.at(0, i * n + i) = Scalar::one(f);
  GradedMap map{c.underlying, unit, eps};
  MorphismReport rep = check_morphism(map);
  if (!rep.ok)
    fail(Errc::MorphismCheckFailed,
         "counit fails to kill the relations at degree " + std::to_string(rep.degree),
         rep.degree);
  return map;
}

GradedMap cocomposition(const CohomObject& cab, const CohomObject& cbc) {
  if (!cab.b.same_space(cbc.a))
    fail(Errc::EndpointMismatch, "cocomposition needs hom[B,A] and hom[C,B]");
  if (!cab.theta_b.same_action(cbc.theta_a))
    fail(Errc::EndpointMismatch, "the two objects use different primitives on B");
  Field f = cab.a.field();
  int n = cab.a.gens(), m = cab.b.gens(), p = cbc.b.gens();

  CohomObject cac = build_cohom(cbc.b, cab.a, cab.theta_a, cbc.theta_b);
  QuantumSpace target = white_product(cab.underlying, cbc.underlying);

  int n_ba = n * m, n_cb = m * p;
  Matrix delta(f, n_ba * n_cb, n * p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i)
      for (int kk = 0; kk < m; ++kk) {
        int row = (kk * n + i) * n_cb + (j * m + kk);
        delta.at(row, j * n + i) = Scalar::one(f);
      }

  GradedMap map{cac.underlying, target, delta};
  MorphismReport rep = check_morphism(map);
  if (!rep.ok)
    fail(Errc::MorphismCheckFailed,
         "cocomposition is not a morphism at degree " + std::to_string(rep.degree),
         rep.degree);
  return map;
}

GradedMap factorize(const CohomObject& c, const Diagram& d) {
  if (!d.a.same_space(c.a) || !d.b.same_space(c.b))
    fail(Errc::EndpointMismatch, "diagram endpoints do not match the coHom object");
  DiagramReport rep = check_in_omega(d, c.theta_a, c.theta_b);
  if (!rep.ok())
    fail(Errc::NotInCategory, "diagram is not an object of the twisted category");

  QuantumSpace fsub = functor_image(d);
  Subspace gens = d.generator_span();
  Field f = c.a.field();
  int n = c.a.gens(), m = c.b.gens();
  Matrix f1(f, fsub.gens(), n * m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      SVec coords = coords_in_basis(gens, d.table[i][j]);
      for (const auto& [t, coef] : coords.e)
        f1.at(t, j * n + i) = coef;
    }

  GradedMap map{c.underlying, fsub, f1};
  MorphismReport mrep = check_morphism(map);
  if (!mrep.ok)
    fail(Errc::MorphismCheckFailed,
         "factorization fails at degree " + std::to_string(mrep.degree), mrep.degree);
  return map;
}

Diagram compose_diagrams(const Diagram& d1, const Diagram& d2) {
  if (!d1.b.same_space(d2.a))
    fail(Errc::EndpointMismatch, "inner spaces of the diagrams do not match");
  Field f = d1.a.field();
  int n = d1.a.gens(), m = d1.b.gens(), p = d2.b.gens();
  int ng = d2.h.gens();

  Diagram d;
  d.a = d1.a;
  d.b = d2.b;
  d.h = white_product(d1.h, d2.h);
  d.table.assign(n, std::vector<SVec>(p));
  for (int i = 0; i < n; ++i)
    for (int kk = 0; kk < p; ++kk) {
      std::vector<std::pair<long, Scalar>> buf;
      for (int j = 0; j < m; ++j)
        for (const auto& [x, cx] : d1.table[i][j].e)
          for (const auto& [y, cy] : d2.table[j][kk].e)
            buf.emplace_back(static_cast<long>(x) * ng + y, cx * cy);
      std::sort(buf.begin(), buf.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      SVec v;
      for (auto& [idx, val] : buf) {
        if (!v.e.empty() && v.e.back().first == static_cast<int>(idx)) {
          v.e.back().second += val;
          if (v.e.back().second.is_zero())
            v.e.pop_back();
        } else if (!val.is_zero()) {
          v.e.emplace_back(static_cast<int>(idx), std::move(val));
        }
      }
      d.table[i][kk] = std::move(v);
    }
  return d;
}

bool gauge_check(const QuantumSpace& b, const QuantumSpace& a,
                 const Primitive& theta_a, const Primitive& theta_b) {
  CohomObject c = build_cohom(b, a, theta_a, theta_b);
  Primitive chi = join(dualize(invert(theta_b)), theta_a);
  QuantumSpace lhs = twist_space(c.untwisted, chi);
  if (!lhs.same_space(c.underlying))
    return false;
  return lhs.hilbert() == c.untwisted.hilbert();
}

} // namespace qhom
