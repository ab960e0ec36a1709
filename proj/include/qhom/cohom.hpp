#pragma once

#include "qhom/products.hpp"
#include "qhom/twist.hpp"

namespace qhom {

/// Comma-category datum <phi, H>: a carrier H plus the table of degree-1
/// elements h_i^j of H with phi(a_i) = sum_j h_i^j (x) b_j.
struct Diagram {
  QuantumSpace a, b, h;
  std::vector<std::vector<SVec>> table; // [i][j], entries in H_1 coordinates

  /// Substitution matrix (dim H1 * dim B1) x dim A1 in grouped (h,b) letters.
  Matrix phi1() const;
  Subspace generator_span() const;
};

/// The subalgebra of the carrier generated by the table entries.
QuantumSpace functor_image(const Diagram& d);

/// Unit diagram <l_A, K>: h_i^j = delta_i^j e.
Diagram unit_diagram(const QuantumSpace& a);

/// Coefficients of v in the canonical basis of a subspace; v must lie in it.
SVec coords_in_basis(const Subspace& basis, const SVec& v);

/// Result of transporting the factorizable cochain along pi^phi onto the
/// generated subalgebra's letters.
struct OmegaTransport {
  bool stable = true;
  int fail_degree = -1;
  Primitive transported; // on the generated subalgebra's letters
  Matrix pi1;            // k x (m*n) surjection, z-letter -> coordinates of h_i^j
};

OmegaTransport transport_omega(const Diagram& d, const Primitive& theta_a,
                               const Primitive& theta_b);

struct DiagramReport {
  bool transport_ok = false;
  int transport_degree = -1;
  bool admissible_ok = false;
  int admissible_degree = -1;
  bool morphism_ok = false;
  int morphism_degree = -1;
  SVec witness;
  bool has_transported = false;
  Primitive transported;

  bool ok() const { return transport_ok && admissible_ok && morphism_ok; }
};

/// Membership of a diagram in the twisted category: the cochain transports,
/// stays admissible on F<phi,H> o B, and phi lands the relations of A in the
/// twisted target's kernels. Verified degree by degree up to the cutoff.
DiagramReport check_in_omega(const Diagram& d, const Primitive& theta_a,
                             const Primitive& theta_b);

/// The initial object hom^O[B,A]: the twisted triangle product, built along
/// both routes of the defining identity, which must agree.
class CohomObject {
public:
  QuantumSpace underlying; // B_twist |> A_twist
  QuantumSpace untwisted;  // B |> A
  QuantumSpace a, b;
  Primitive theta_a, theta_b;
  Primitive omega; // factorizable cochain primitive on (B* (x) A (x) B)

  Diagram coevaluation_diagram() const;
};

CohomObject build_cohom(const QuantumSpace& b, const QuantumSpace& a,
                        const Primitive& theta_a, const Primitive& theta_b);

/// Degreewise verification of the coevaluation: the twisted substitution
/// sends K_{A,r} into the kernel of (hom o B), and untwisting the product
/// by omega recovers (B |> A) o B.
bool coevaluation_check(const CohomObject& c);

/// Counit z_i^j -> delta_i^j e of end^O[A]; morphism check must pass.
GradedMap counit(const CohomObject& c);

/// Cocomposition hom^O[C,A] -> hom^O[B,A] o hom^O[C,B] on z_i^j -> z_i^k (x) z_k^j.
GradedMap cocomposition(const CohomObject& cab, const CohomObject& cbc);

/// The unique arrow hom^O[B,A] -> F<phi,H> with z_i^j -> h_i^j.
GradedMap factorize(const CohomObject& c, const Diagram& d);

/// Semigroupoid composition <phi,H> x <chi,G> -> <(I o chi) phi, H o G>.
Diagram compose_diagrams(const Diagram& d1, const Diagram& d2);

/// Gauge statement: twisting the triangle product by the joined primitive
/// reproduces the built coHom object, with unchanged graded dimensions.
bool gauge_check(const QuantumSpace& b, const QuantumSpace& a,
                 const Primitive& theta_a, const Primitive& theta_b);

} // namespace qhom
