#include "k3tau/conditions.hpp"

#include <string>

#include "k3tau/lattice.hpp"
#include "k3tau/pell.hpp"

namespace k3tau {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool cond_star(std::int64_t d) { return d > 6 && (d % 6 == 0 || d % 6 == 2); }

bool cond_twostar(std::int64_t d) {
  if (d <= 0 || d % 2 != 0 || d % 4 == 0 || d % 9 == 0) return false;
  for (auto [p, e] : factorize(d))
    if (p % 2 == 1 && p % 3 == 2) return false;
  return true;
}

ThreeStar cond_threestar(std::int64_t d) {
  if (d % 2 != 0) throw InadmissibleDegree("d must be even");
  ThreeStar out;
  if (d <= 0) throw InadmissibleDegree("d must be positive");
  // (2n+1)^2 - (d/2)(2a)^2 = -3
  const Integer D = d / 2;
  // a^2 D = n^2 + n + 1 lies strictly between n^2 and (n+1)^2
  if (is_square(D)) return out;
  auto even_y = [](const PellSolution& s) { return mpz_even_p(s.y.get_mpz_t()) != 0; };
  auto best = pell_least_with(D, Integer(-3), Integer(2), even_y);
  if (!best) return out;
  if (best->x < 5) {
    // x = 3 (n = 1) happens only for d = 6; take the next solution along the orbits
    const detail::OrbitSearch search = detail::prepare_orbit_search(D, Integer(-3), Integer(2));
    best.reset();
    for (const auto& seed : search.seeds) {
      PellSolution s = seed;
      for (int k = 0; k < 64; ++k, s = detail::step(s, search.unit, D)) {
        PellSolution a{abs(s.x), abs(s.y)};
        if (!even_y(a) || a.x < 5) continue;
        if (!best || a.y < best->y || (a.y == best->y && a.x < best->x)) best = a;
      }
    }
    if (!best) throw InternalError("no threestar witness with n >= 2");
  }
  if (best->y == 0) throw InternalError("threestar witness with a = 0");
  out.holds = true;
  out.witness = ThreeStarWitness{best->y / 2, (best->x - 1) / 2};
  return out;
}

bool tau_strict(std::int64_t d) { return d % 6 == 0 && cond_twostar(d); }

bool tau_extended(std::int64_t d) { return d > 0 && d % 6 == 0 && (d / 6) % 3 == 1; }

void require_tau_extended(std::int64_t d) {
  if (d <= 0 || d % 6 != 0) throw InadmissibleDegree("d = " + std::to_string(d) + " fails d = 0 mod 6");
  if ((d / 6) % 3 != 1)
    throw InadmissibleDegree("d = " + std::to_string(d) + " fails d/6 = 1 mod 3 (d/6 = " + std::to_string(d / 6) + ")");
}

DClassification classify_d(std::int64_t d) {
  if (d <= 0) throw InadmissibleDegree("d must be positive");
  if (d % 2 != 0) throw InadmissibleDegree("d must be even");
  DClassification c;
  c.d = d;
  c.star = cond_star(d);
  c.twostar = cond_twostar(d);
  c.threestar = cond_threestar(d);
  c.tau_strict = tau_strict(d);
  c.tau_extended = tau_extended(d);
  return c;
}

}  // namespace k3tau
