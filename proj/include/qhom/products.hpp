#pragma once

#include "qhom/qspace.hpp"

namespace qhom {

/// Quadratic dual: generators are the dual basis, degree-2 relations are the
/// annihilator of the original ones. Input must be quadratic.
QuantumSpace koszul_dual(const QuantumSpace& a);

/// Segre-style product: (A o B)_d = A_d (x) B_d. Kernels are computed on the
/// annihilator side, so only algebra-sized data is eliminated.
QuantumSpace white_product(const QuantumSpace& a, const QuantumSpace& b);

/// Quadratic black product: degree-2 relations are the interleaved tensor
/// R_bdual (x) R_a of the two relation spaces.
QuantumSpace black_product(const QuantumSpace& bdual, const QuantumSpace& a);

/// Conic coHom carrier B |> A on generators z_i^j = b^j (x) a_i: the degree-r
/// relation contribution is interleave(ann K_{B,r} (x) K_{A,r}), closed up as
/// a two-sided ideal.
QuantumSpace triangle_product(const QuantumSpace& b, const QuantumSpace& a);

/// Shared label scheme for product generators z_i^j (i on the A side, j on
/// the dual/B side).
std::vector<std::string> z_labels(int n_a, int m_b);

} // namespace qhom
