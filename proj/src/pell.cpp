#include "k3tau/pell.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace k3tau {

namespace {

void require_nonsquare(const Integer& D) {
  if (D <= 0) throw std::invalid_argument("Pell: D must be positive");
  if (is_square(D)) throw std::invalid_argument("Pell: D must not be a perfect square");
}

// Walks the continued fraction of sqrt(D) until h^2 - D k^2 hits +1, or -1 when `negative`.
std::optional<PellSolution> continued_fraction_search(const Integer& D, bool negative) {
  require_nonsquare(D);
  const Integer a0 = isqrt(D);
  Integer m = 0, dd = 1, a = a0;
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (;;) {
    Integer h = a * h1 + h2;
    Integer k = a * k1 + k2;
    Integer norm = h * h - D * k * k;
    if (norm == (negative ? -1 : 1)) return PellSolution{h, k};
    if (negative && norm == 1) return std::nullopt;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    m = dd * a - m;
    dd = (D - m * m) / dd;
    a = (a0 + m) / dd;
  }
}

// floor((P + sqrt(D)) / Q) for nonsquare D, with s = isqrt(D).
Integer pqa_partial(const Integer& P, const Integer& Q, const Integer& s) {
  if (Q > 0) return floor_div(P + s, Q);
  return -(floor_div(P + s, -Q) + 1);
}

// PQa expansion started at (P0, Q0). Returns (G_{i-1}, B_{i-1}) for the first i >= 1 with
// Q_i = +-1, or nullopt once the expansion becomes periodic without reaching it.
std::optional<std::pair<Integer, Integer>> pqa_unit_convergent(const Integer& D, const Integer& P0, const Integer& Q0) {
  const Integer s = isqrt(D);
  Integer P = P0, Q = Q0;
  Integer g2 = -P0, g1 = Q0;  // G_{i-2}, G_{i-1}
  Integer b2 = 1, b1 = 0;     // B_{i-2}, B_{i-1}
  std::set<std::pair<Integer, Integer>> seen;
  for (std::size_t i = 0;; ++i) {
    if (i >= 1) {
      if (Q == 1 || Q == -1) return std::make_pair(g1, b1);
      if (!seen.emplace(P, Q).second) return std::nullopt;
    }
    Integer a = pqa_partial(P, Q, s);
    Integer g = a * g1 + g2;
    Integer b = a * b1 + b2;
    g2 = g1;
    g1 = g;
    b2 = b1;
    b1 = b;
    Integer p_next = a * Q - P;
    Integer q_next = (D - p_next * p_next) / Q;
    P = p_next;
    Q = q_next;
  }
}

bool fits_scan(const Integer& D, const Integer& N, const Integer& bound) {
  // D * bound^2 + |N| must stay well inside int64
  return bound < Integer(3037000499) && D * bound * bound + abs(N) < Integer("4000000000000000000");
}

std::optional<std::int64_t> exact_sqrt64(std::int64_t t) {
  if (t < 0) return std::nullopt;
  if (t < 2) return t;
  // integer Newton from a power of two above the root
  const int bits = 64 - __builtin_clzll(static_cast<unsigned long long>(t));
  std::int64_t r = std::int64_t{1} << ((bits + 1) / 2);
  for (std::int64_t next = (r + t / r) / 2; next < r; next = (r + t / r) / 2) r = next;
  while ((r + 1) * (r + 1) <= t) ++r;
  if (r * r != t) return std::nullopt;
  return r;
}

}  // namespace

PellSolution pell_fundamental(const Integer& D) { return *continued_fraction_search(D, false); }

std::optional<PellSolution> pell_negative_fundamental(const Integer& D) { return continued_fraction_search(D, true); }

Integer pell_class_bound(const Integer& D, const Integer& N) {
  require_nonsquare(D);
  if (N == 0) throw std::invalid_argument("Pell: N must be nonzero");
  PellSolution e = pell_fundamental(D);
  Integer denom = N > 0 ? Integer(2 * (e.x + 1)) : Integer(2 * (e.x - 1));
  return isqrt(e.y * e.y * abs(N) / denom) + 1;
}

std::vector<PellSolution> pell_class_representatives(const Integer& D, const Integer& N) {
  require_nonsquare(D);
  if (N == 0) throw std::invalid_argument("Pell: N must be nonzero");
  const auto neg = pell_negative_fundamental(D);
  std::vector<PellSolution> reps;
  const Integer an = abs(N);
  for (Integer f = 1; f * f <= an; ++f) {
    if (!mpz_divisible_p(N.get_mpz_t(), Integer(f * f).get_mpz_t())) continue;
    const Integer m = N / (f * f);
    const Integer am = abs(m);
    if (am == 1) {
      if (m == 1)
        reps.push_back({f, 0});
      else if (neg)
        reps.push_back({f * neg->x, f * neg->y});
      continue;
    }
    for (Integer z = -floor_div(am - 1, 2); 2 * z <= am; ++z) {
      if (mod(z * z - D, am) != 0) continue;
      auto rs = pqa_unit_convergent(D, z, am);
      if (!rs) continue;
      const auto& [r, s] = *rs;
      Integer val = r * r - D * s * s;
      if (val == m) {
        reps.push_back({f * r, f * s});
      } else if (val == -m && neg) {
        reps.push_back({f * (r * neg->x + s * neg->y * D), f * (r * neg->y + s * neg->x)});
      }
    }
  }
  return reps;
}

namespace detail {

PellSolution step(const PellSolution& s, const PellSolution& unit, const Integer& D) {
  return {unit.x * s.x + D * unit.y * s.y, unit.x * s.y + unit.y * s.x};
}

OrbitSearch prepare_orbit_search(const Integer& D, const Integer& N, const Integer& modulus) {
  OrbitSearch out{D, modulus, pell_fundamental(D), {}};
  const PellSolution inv{out.unit.x, -out.unit.y};
  for (PellSolution s : pell_class_representatives(D, N)) {
    // move to the element of least |y| in the class
    for (;;) {
      PellSolution fwd = step(s, out.unit, D);
      PellSolution bwd = step(s, inv, D);
      if (abs(fwd.y) < abs(s.y))
        s = fwd;
      else if (abs(bwd.y) < abs(s.y))
        s = bwd;
      else
        break;
    }
    out.seeds.push_back(s);
    out.seeds.push_back({s.x, -s.y});
  }
  return out;
}

}  // namespace detail

PellWitness pell_solve(const Integer& D, const Integer& N, PellMethod method) {
  require_nonsquare(D);
  if (N == 0) throw std::invalid_argument("Pell: N must be nonzero");
  if (method == PellMethod::Auto)
    method = pell_class_bound(D, N) <= 1000000 ? PellMethod::BoundedScan : PellMethod::ClassRepresentatives;

  if (method == PellMethod::BoundedScan) {
    const Integer bound = pell_class_bound(D, N);
    PellWitness w{false, 0, 0, "bounded-scan"};
    if (auto hit = pell_brute_force(D, N, bound)) {
      w.solvable = true;
      w.x = hit->x;
      w.y = hit->y;
    }
    return w;
  }
  PellWitness w{false, 0, 0, "class-representatives"};
  auto best = pell_least_with(D, N, 1, [](const PellSolution&) { return true; });
  if (best) {
    w.solvable = true;
    w.x = best->x;
    w.y = best->y;
  }
  return w;
}

std::optional<PellSolution> pell_brute_force(const Integer& D, const Integer& N, const Integer& y_bound) {
  if (y_bound < 0) throw std::invalid_argument("pell_brute_force: negative bound");
  if (fits_scan(D, N, y_bound)) {
    const std::int64_t d = D.get_si(), n = N.get_si(), b = y_bound.get_si();
    for (std::int64_t y = 0; y <= b; ++y)
      if (auto x = exact_sqrt64(n + d * y * y)) return PellSolution{Integer(static_cast<long>(*x)), Integer(static_cast<long>(y))};
    return std::nullopt;
  }
  for (Integer y = 0; y <= y_bound; ++y) {
    Integer t = N + D * y * y;
    if (t >= 0 && is_square(t)) return PellSolution{isqrt(t), y};
  }
  return std::nullopt;
}

bool AffineConstraints::admits(const Integer& p, const Integer& q, const Integer& a) const {
  const bool pe = mpz_even_p(p.get_mpz_t()) != 0;
  const bool qe = mpz_even_p(q.get_mpz_t()) != 0;
  if (p_odd && pe) return false;
  if (p_even && !pe) return false;
  if (q_odd && qe) return false;
  if (q_even && !qe) return false;
  if (x_div3 && mod(a * p, Integer(3)) != 0) return false;
  return true;
}

std::string AffineConstraints::describe() const {
  std::string out;
  auto put = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  put(p_odd, "p-odd");
  put(p_even, "p-even");
  put(q_odd, "q-odd");
  put(q_even, "q-even");
  put(x_div3, "x-div3");
  return out;
}

AffineConstraints AffineConstraints::parse(const std::string& text) {
  AffineConstraints c;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    if (item == "p-odd")
      c.p_odd = true;
    else if (item == "p-even")
      c.p_even = true;
    else if (item == "q-odd")
      c.q_odd = true;
    else if (item == "q-even")
      c.q_even = true;
    else if (item == "x-div3")
      c.x_div3 = true;
    else if (!item.empty())
      throw std::invalid_argument("unknown constraint '" + item + "'");
    start = end + 1;
  }
  return c;
}

AffineWitness solve_affine(const Integer& a, const Integer& b, const Integer& c, const AffineConstraints& constraints) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("solve_affine: a and b must be positive");
  const Integer D = a * b;
  if (is_square(D)) throw std::invalid_argument("solve_affine: a*b must not be a perfect square");
  if (c == 0) {
    // a nonsquare ratio forces P = Q = 0
    if (constraints.admits(0, 0, a)) return {true, 0, 0, "trivial"};
    return {false, 0, 0, "trivial"};
  }
  // multiply by a: (aP)^2 - ab Q^2 = ac
  auto best = pell_least_with(D, a * c, 6 * a, [&](const PellSolution& s) {
    if (mod(s.x, a) != 0) return false;
    return constraints.admits(s.x / a, s.y, a);
  });
  if (!best) return {false, 0, 0, "class-representatives"};
  return {true, best->x / a, best->y, "class-representatives"};
}

AffineWitness solve_affine_any(const Integer& a, const Integer& b, const Integer& c,
                               const AffineConstraints& constraints) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("solve_affine: a and b must be positive");
  const Integer D = a * b;
  if (!is_square(D) || c == 0) return solve_affine(a, b, c, constraints);
  // (X - kQ)(X + kQ) = ac with X = aP, k^2 = ab
  const Integer k = isqrt(D);
  const Integer n = a * c;
  const Integer an = abs(n);
  std::optional<PellSolution> best;
  for (Integer u = 1; u * u <= an; ++u) {
    if (!mpz_divisible_p(an.get_mpz_t(), u.get_mpz_t())) continue;
    for (const Integer& f : {u, Integer(an / u)}) {
      for (int sign : {1, -1}) {
        Integer x_minus = sign * f;
        Integer x_plus = n / x_minus;
        Integer sum = x_minus + x_plus, diff = x_plus - x_minus;
        if (mpz_odd_p(sum.get_mpz_t()) || !mpz_divisible_p(diff.get_mpz_t(), Integer(2 * k).get_mpz_t())) continue;
        Integer x = abs(sum / 2), q = abs(diff / (2 * k));
        if (!mpz_divisible_p(x.get_mpz_t(), a.get_mpz_t())) continue;
        Integer p = x / a;
        if (!constraints.admits(p, q, a)) continue;
        if (!best || q < best->y || (q == best->y && p < best->x)) best = PellSolution{p, q};
      }
    }
  }
  if (!best) return {false, 0, 0, "factorization"};
  return {true, best->x, best->y, "factorization"};
}

std::optional<PellSolution> affine_brute_force(const Integer& a, const Integer& b, const Integer& c,
                                               const AffineConstraints& constraints, const Integer& q_bound) {
  for (Integer q = 0; q <= q_bound; ++q) {
    Integer t = c + b * q * q;
    if (t < 0 || !mpz_divisible_p(t.get_mpz_t(), a.get_mpz_t())) continue;
    Integer t2 = t / a;
    if (!is_square(t2)) continue;
    Integer p = isqrt(t2);
    if (constraints.admits(p, q, a)) return PellSolution{p, q};
  }
  return std::nullopt;
}

}  // namespace k3tau
