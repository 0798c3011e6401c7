#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3tau/arith.hpp"

namespace k3tau {

struct PellSolution {
  Integer x;
  Integer y;
  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Result of deciding x^2 - D y^2 = N. When solvable, (x, y) is the non-negative
/// solution with least y, and among those least x.
struct PellWitness {
  bool solvable = false;
  Integer x;
  Integer y;
  std::string method;
};

enum class PellMethod { Auto, BoundedScan, ClassRepresentatives };

/// Least positive solution of x^2 - D y^2 = 1 from the continued fraction of sqrt(D).
/// Throws std::invalid_argument unless D > 0 is not a perfect square.
PellSolution pell_fundamental(const Integer& D);
/// Least positive solution of x^2 - D y^2 = -1, if any.
std::optional<PellSolution> pell_negative_fundamental(const Integer& D);

/// Upper bound on |y| for the least solution of each class (Nagell's bound).
Integer pell_class_bound(const Integer& D, const Integer& N);

/// One representative per solution class of x^2 - D y^2 = N, via the PQa expansion (LMM).
std::vector<PellSolution> pell_class_representatives(const Integer& D, const Integer& N);

PellWitness pell_solve(const Integer& D, const Integer& N, PellMethod method = PellMethod::Auto);

/// Exhaustive scan y = 0..y_bound. Returns the first witness, or nullopt when exhausted.
std::optional<PellSolution> pell_brute_force(const Integer& D, const Integer& N, const Integer& y_bound);

/// Congruence side conditions for a P^2 - b Q^2 = c; x stands for a * P.
struct AffineConstraints {
  bool p_odd = false;
  bool p_even = false;
  bool q_odd = false;
  bool q_even = false;
  bool x_div3 = false;

  bool admits(const Integer& p, const Integer& q, const Integer& a) const;
  std::string describe() const;
  /// Parses a comma-separated list of p-odd, p-even, q-odd, q-even, x-div3.
  static AffineConstraints parse(const std::string& text);
};

struct AffineWitness {
  bool solvable = false;
  Integer p;
  Integer q;
  std::string method;
};

/// Decides a P^2 - b Q^2 = c under the constraints, returning the non-negative witness
/// with least Q (then least P). Requires a, b > 0 and a*b not a perfect square.
AffineWitness solve_affine(const Integer& a, const Integer& b, const Integer& c,
                           const AffineConstraints& constraints = {});

/// As solve_affine, but also accepts a perfect square a*b, where the equation factors
/// over the integers and has finitely many solutions.
AffineWitness solve_affine_any(const Integer& a, const Integer& b, const Integer& c,
                               const AffineConstraints& constraints = {});

/// Exhaustive scan q = 0..q_bound for the same problem.
std::optional<PellSolution> affine_brute_force(const Integer& a, const Integer& b, const Integer& c,
                                               const AffineConstraints& constraints, const Integer& q_bound);

/// Least |y| solution of x^2 - D y^2 = N over all (x, y) whose residues mod `modulus`
/// satisfy `accept`. `accept` receives the signed solution and must depend only on
/// x, y mod modulus.
template <class Accept>
std::optional<PellSolution> pell_least_with(const Integer& D, const Integer& N, const Integer& modulus, Accept accept);

namespace detail {
struct OrbitSearch {
  Integer D;
  Integer modulus;
  PellSolution unit;
  std::vector<PellSolution> seeds;
};
OrbitSearch prepare_orbit_search(const Integer& D, const Integer& N, const Integer& modulus);
PellSolution step(const PellSolution& s, const PellSolution& unit, const Integer& D);
}  // namespace detail

template <class Accept>
std::optional<PellSolution> pell_least_with(const Integer& D, const Integer& N, const Integer& modulus, Accept accept) {
  detail::OrbitSearch search = detail::prepare_orbit_search(D, N, modulus);
  std::optional<PellSolution> best;
  auto consider = [&](const PellSolution& s) {
    if (!accept(s)) return;
    PellSolution a{abs(s.x), abs(s.y)};
    if (!best || a.y < best->y || (a.y == best->y && a.x < best->x)) best = a;
  };
  for (const auto& seed : search.seeds) {
    // the residues of the forward orbit are purely periodic
    const Integer x0 = mod(seed.x, search.modulus);
    const Integer y0 = mod(seed.y, search.modulus);
    PellSolution s = seed;
    for (;;) {
      if (best && abs(s.y) > best->y) break;
      consider(s);
      s = detail::step(s, search.unit, D);
      if (mod(s.x, search.modulus) == x0 && mod(s.y, search.modulus) == y0) break;
    }
  }
  return best;
}

}  // namespace k3tau
