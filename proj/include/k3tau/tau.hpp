#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3tau/discriminant.hpp"
#include "k3tau/k3_lattices.hpp"

namespace k3tau {

/// (r, cL, s) over a polarized K3 surface with L^2 = d.
struct MukaiVector {
  Integer r;
  Integer c;
  Integer s;
  Integer d;

  /// c^2 d - 2 r s.
  Integer self_pairing() const;
  bool primitive() const;
  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// c c' d - r s' - r' s. Throws std::invalid_argument if the degrees differ.
Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w);
std::string to_string(const MukaiVector& v);

/// r e4 + c ell_d + t f4 in the extended K3 lattice corresponds to (r, cL, -t): f4 changes sign.
MukaiVector mukai_from_extended(const LatticeVector& x, const Integer& d);
LatticeVector extended_from_mukai(const MukaiVector& v);

/// -id on U1 + U2 and the identity elsewhere, on lattice_cubic().
Isometry build_g();

/// Z ell_d + U4 on the basis (e4, ell_d, f4).
Lattice ell_plus_u4(const Integer& d);
/// The involution of ell_plus_u4(d). Throws InadmissibleDegree when d/6 != 1 mod 3.
Isometry build_u(std::int64_t d);

/// Basis of the complement of K_d = Zh + Zv_d in lattice_cubic(), Hermite-reduced.
Complement kd_perp(std::int64_t d);

struct TauCertificate {
  std::int64_t d = 0;
  Matrix u_matrix;
  Matrix g_matrix;
  Isometry glued;
  MukaiVector v;
  MukaiVector L_tau;
  Integer disc_multiplier;
  /// Basis of Lambda_d inside the extended lattice and the action of g on it.
  Matrix lambda_d_basis;
  Matrix lambda_d_action;
  /// "eisenstein" when Lambda_d is identified with K_d^perp, "substitute" otherwise.
  std::string realization;
  std::optional<std::pair<Integer, Integer>> eisenstein;
};

/// Builds g on Lambda_d, pairs it with u, and glues to an involution of lattice_k3_extended().
/// Throws InadmissibleDegree unless tau_extended(d); InternalError if any identity fails.
TauCertificate build_gtilde(std::int64_t d);

/// (3, L, d/6), checked against the image of f4 under the glued involution.
MukaiVector mukai_vector_of_tau(std::int64_t d);
/// (d, (d/3-1)L, (d/3)(d/6-1)), checked against (v, L^tau) = 0 and (L^tau)^2 = d.
MukaiVector tau_polarization(std::int64_t d);

/// Some w = (x0, aL, x4) with (v, w) = 1, or nullopt when every pairing is divisible
/// by gcd(cd, r, s) > 1.
std::optional<MukaiVector> fine_moduli_witness(const MukaiVector& v);

struct TauReport {
  std::int64_t d = 0;
  bool ok = false;
  std::size_t complement_rank = 0;
  std::vector<Integer> kd_invariants;          // Disc K_d
  std::vector<Integer> complement_invariants;  // Disc K_d^perp
  Integer multiplier;
  Integer expected;
  std::vector<std::string> failures;
};

/// End-to-end check of the action of g on Disc K_d^perp.
TauReport verify_tau(std::int64_t d);

struct MultiplierCandidate {
  Integer alpha;
  bool order_three = false;   // (alpha + 1) x has order 3
  bool preserves_q = false;   // q(alpha x) = q(x) in Q/2Z
  bool admissible() const { return order_three && preserves_q; }
};

/// The three units alpha = -1 mod d/3 and the two checks that single out d/3 - 1,
/// evaluated on Disc K_d^perp. Also returns the multiplier g actually induces.
struct MultiplierAnalysis {
  std::int64_t d = 0;
  std::vector<MultiplierCandidate> candidates;
  Integer induced;
};
MultiplierAnalysis analyze_multipliers(std::int64_t d);

/// Primitive (a, b) with a^2 - ab + b^2 = m, if one exists.
std::optional<std::pair<Integer, Integer>> eisenstein_representation(const Integer& m);

}  // namespace k3tau
