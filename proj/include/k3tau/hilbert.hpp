#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3tau/lattice.hpp"
#include "k3tau/tau.hpp"

namespace k3tau {

/// ZL + Z delta with L^2 = d, delta^2 = -2.
Lattice ns_hilb2(const Integer& d);

/// The class aL + b delta.
struct NSClass {
  Integer a;
  Integer b;
  Integer d;

  Integer square() const { return a * a * d - 2 * b * b; }
  /// gcd(a d, 2 b): the positive generator of the pairings with ns_hilb2(d).
  Integer div() const { return gcd(Integer(a * d), Integer(2 * b)); }
  friend bool operator==(const NSClass&, const NSClass&) = default;
};

/// All classes with |a| <= a_bound, |b| <= b_bound and the given square (and divisibility,
/// if requested), one per sign orbit: a >= 0, and b >= 0 when a = 0. Sorted by (a, b).
std::vector<NSClass> classes_of_square(const Integer& d, const Integer& target_square, const Integer& a_bound,
                                       const Integer& b_bound, std::optional<Integer> div_filter = std::nullopt);

struct UniqueModelReport {
  std::int64_t d = 0;
  /// True only when backed by a proof (the mod 3 obstruction).
  bool conclusive = false;
  bool unique = false;
  std::string certificate;
  std::string verdict;
  Integer a_bound;
  Integer b_bound;
  std::vector<NSClass> candidates;  // square -10, divisibility 2, within the bounds
};

/// Square -10 classes of divisibility 2 in ns_hilb2(d). Throws InadmissibleDegree unless d > 6 even.
UniqueModelReport hilb2_unique_model(std::int64_t d, const Integer& bound = 200);

struct MukaiDecomposition {
  Integer p;
  Integer q;
  Integer r;
  Integer s;
  bool gcd_ok = false;
};

/// v = (p^2 r, pq L, q^2 s) with p = gcd(v.r, v.c) and q = sign(c) gcd(v.s, v.c).
/// Rejects (std::invalid_argument) vectors that are not isotropic, not primitive, have r <= 0 or c = 0.
MukaiDecomposition decompose_mukai(const MukaiVector& v);

/// {r, s} == {r2, s2}. Throws std::invalid_argument unless all are positive and rs = r2 s2.
bool moduli_iso(const Integer& r, const Integer& s, const Integer& r2, const Integer& s2);

struct HilbVerdict {
  std::int64_t d = 0;
  std::int64_t n = 0;
  bool birational = false;
  /// "F" for n = 2, otherwise "F1", "F2" or "F3"; empty when not birational.
  std::string equation;
  Integer p;
  Integer q;
  std::string scope = "Picard rank 1";
};

/// Equation of a branch, e.g. "3p^2 - 13q^2 = -1".
std::string equation_text(std::int64_t d, std::int64_t n, const std::string& branch);

/// Decides birationality of Hilb^n(S) and Hilb^n(S^tau) for Picard rank one through
/// p^2 r (n-1) - q^2 s = +-1 with {r, s} = {3, d/6} in both orders:
///   F1: 3(n-1)p^2 - (d/6)q^2 = -1
///   F2: 3p^2 - (d/6)(n-1)q^2 = -1
///   F3: 3p^2 - (d/6)(n-1)q^2 = +1   (only possible when 3 | n)
/// The fourth combination is impossible mod 3.
HilbVerdict hilb_birational(std::int64_t d, std::int64_t n);

/// (1, L, d/2) pushed k times through the glued involution, with its decomposition.
struct PartnerStep {
  MukaiVector vector;
  MukaiDecomposition decomposition;
};
std::vector<PartnerStep> partner_orbit(std::int64_t d, int steps);

enum class SpecialCase { N3Prime, N4Prime, N5Equiv, ThreestarImpliesF };

struct ScanReport {
  std::string kind;
  std::int64_t d_from = 0;
  std::int64_t d_to = 0;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

std::string special_case_name(SpecialCase kind);
ScanReport special_case_checks(std::int64_t d_from, std::int64_t d_to, SpecialCase kind);

}  // namespace k3tau
