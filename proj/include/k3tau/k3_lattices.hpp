#pragma once

#include "k3tau/lattice.hpp"

namespace k3tau {

// Basis labels. The two E8(-1) copies are a1..a8 and b1..b8, hyperbolic planes e_i, f_i,
// and the three Z(-1) summands of the cubic lattice z1, z2, z3.

/// E8(-1)^2 + U1 + U2 + U3, rank 22.
Lattice lattice_k3();
/// lattice_k3() + U4, rank 24.
Lattice lattice_k3_extended();
/// lattice_k3() + U4(-1), rank 24.
Lattice lattice_mukai();
/// E8(-1)^2 + U1 + U2 + Z(-1)^3, rank 23 (odd, unimodular).
Lattice lattice_cubic();
/// Orthogonal complement of h in lattice_cubic(), rank 22.
Complement lattice_cubic_primitive();

/// e3 + (d/2) f3 in any lattice carrying the labels e3, f3. Requires d even.
LatticeVector ell_d(const Lattice& lattice, const Integer& d);
/// e3 - (d/2) f3, the generator of the Z(-d) summand of ell_d's complement.
LatticeVector m_d(const Lattice& lattice, const Integer& d);
/// (1,1,1) in the Z(-1)^3 summand of lattice_cubic().
LatticeVector h_vector();
/// e2 - (d/6) f2 in lattice_cubic(). Requires 6 | d.
LatticeVector v_d(const Integer& d);

/// Columns: images of the A2 basis under l1 -> e3 + f3, l2 -> e4 + f4 - e3 in lattice_k3_extended().
Matrix a2_embedding();

/// Complement of ell_d in lattice_k3(), rank 21.
Complement lattice_degree(const Integer& d);

/// Columns from a list of vectors of equal length.
Matrix columns(const std::vector<LatticeVector>& vectors);

}  // namespace k3tau
