#include "k3tau/hilbert.hpp"

#include <algorithm>

#include "k3tau/conditions.hpp"
#include "k3tau/pell.hpp"

namespace k3tau {

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

// a p^2 - b q^2 = c has no solution modulo 3.
bool mod3_obstructed(const Integer& a, const Integer& b, const Integer& c) {
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      if (mod(Integer(a * p * p - b * q * q - c), Integer(3)) == 0) return false;
  return true;
}

std::string term(const Integer& coeff, const char* var) {
  return (coeff == 1 ? std::string() : to_string(coeff)) + var + "^2";
}

}  // namespace

Lattice ns_hilb2(const Integer& d) {
  Matrix g(2, 2);
  g(0, 0) = d;
  g(1, 1) = -2;
  return Lattice(g, {"L", "delta"});
}

std::vector<NSClass> classes_of_square(const Integer& d, const Integer& target_square, const Integer& a_bound,
                                       const Integer& b_bound, std::optional<Integer> div_filter) {
  if (a_bound < 0 || b_bound < 0) throw std::invalid_argument("classes_of_square: negative bound");
  std::vector<NSClass> out;
  for (Integer a = 0; a <= a_bound; ++a) {
    Integer twice = a * a * d - target_square;  // = 2 b^2
    if (twice < 0 || mpz_odd_p(twice.get_mpz_t())) continue;
    Integer b2 = twice / 2;
    if (!is_square(b2)) continue;
    Integer b = isqrt(b2);
    if (b > b_bound) continue;
    std::vector<Integer> bs{b};
    if (a > 0 && b > 0) bs.insert(bs.begin(), Integer(-b));
    for (const Integer& bb : bs) {
      NSClass c{a, bb, d};
      if (div_filter && c.div() != *div_filter) continue;
      out.push_back(c);
    }
  }
  return out;
}

UniqueModelReport hilb2_unique_model(std::int64_t d, const Integer& bound) {
  if (d <= 6 || d % 2 != 0) throw InadmissibleDegree("d must be even and greater than 6");
  UniqueModelReport rep;
  rep.d = d;
  rep.a_bound = bound;
  rep.b_bound = bound;
  const Integer dd = big(d);
  rep.candidates = classes_of_square(dd, -10, bound, bound, Integer(2));
  if (d % 3 == 0) {
    // a^2 d - 2 b^2 = -10 reduces to b^2 = 2 mod 3
    if (!rep.candidates.empty() || !classes_of_square(dd, -10, bound, bound).empty())
      throw InternalError("square -10 class found although 3 | d");
    rep.conclusive = true;
    rep.unique = true;
    rep.certificate = "mod 3: a^2 d - 2b^2 = -10 forces b^2 = 2 mod 3";
    rep.verdict = "unique birational model";
  } else {
    rep.certificate = "bounded search |a|, |b| <= " + to_string(bound);
    rep.verdict = rep.candidates.empty() ? "no wall candidate within bounds" : "wall candidate found";
  }
  return rep;
}

MukaiDecomposition decompose_mukai(const MukaiVector& v) {
  if (v.self_pairing() != 0) throw std::invalid_argument("Mukai vector is not isotropic");
  if (!v.primitive()) throw std::invalid_argument("Mukai vector is not primitive");
  if (v.r <= 0) throw std::invalid_argument("decomposition needs r > 0");
  if (v.c == 0) throw std::invalid_argument("decomposition needs c != 0");
  MukaiDecomposition out;
  out.p = gcd(v.r, v.c);
  out.q = gcd(v.s, v.c);
  if (v.c < 0) out.q = -out.q;
  const Integer p2 = out.p * out.p, q2 = out.q * out.q;
  if (!mpz_divisible_p(v.r.get_mpz_t(), p2.get_mpz_t()) || !mpz_divisible_p(v.s.get_mpz_t(), q2.get_mpz_t()))
    throw std::invalid_argument("Mukai vector has no decomposition (p^2 r, pq L, q^2 s)");
  out.r = v.r / p2;
  out.s = v.s / q2;
  out.gcd_ok = gcd(Integer(out.p * out.r), Integer(out.q * out.s)) == 1;
  if (out.p * out.q != v.c) throw InternalError("decomposition does not reproduce c");
  if (2 * out.r * out.s != v.d) throw InternalError("decomposition violates d = 2rs");
  return out;
}

bool moduli_iso(const Integer& r, const Integer& s, const Integer& r2, const Integer& s2) {
  if (r <= 0 || s <= 0 || r2 <= 0 || s2 <= 0) throw std::invalid_argument("moduli_iso needs positive integers");
  if (r * s != r2 * s2) throw std::invalid_argument("moduli_iso: degrees 2rs differ");
  return (r == r2 && s == s2) || (r == s2 && s == r2);
}

std::string equation_text(std::int64_t d, std::int64_t n, const std::string& branch) {
  const Integer m = big(d / 6), k = big(n - 1);
  if (branch == "F" || branch == "F1") return term(Integer(3 * k), "p") + " - " + term(m, "q") + " = -1";
  if (branch == "F2") return term(3, "p") + " - " + term(Integer(m * k), "q") + " = -1";
  if (branch == "F3") return term(3, "p") + " - " + term(Integer(m * k), "q") + " = 1";
  throw std::invalid_argument("unknown equation " + branch);
}

HilbVerdict hilb_birational(std::int64_t d, std::int64_t n) {
  require_tau_extended(d);
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const Integer m = big(d / 6), k = big(n - 1);
  HilbVerdict out;
  out.d = d;
  out.n = n;

  if (!mod3_obstructed(Integer(3 * k), m, 1)) throw InternalError("3(n-1)p^2 - (d/6)q^2 = 1 is not excluded mod 3");
  struct Branch {
    const char* name;
    Integer a, b, c;
  };
  std::vector<Branch> branches{{n == 2 ? "F" : "F1", Integer(3 * k), m, -1}};
  if (n > 2) {
    branches.push_back({"F2", 3, Integer(m * k), -1});
    if (mod3_obstructed(3, Integer(m * k), 1)) {
      if (n % 3 == 0) throw InternalError("F3 unexpectedly excluded mod 3");
    } else {
      branches.push_back({"F3", 3, Integer(m * k), 1});
    }
  }
  for (const auto& br : branches) {
    AffineWitness w = solve_affine_any(br.a, br.b, br.c);
    if (!w.solvable) continue;
    out.birational = true;
    out.equation = br.name;
    out.p = w.p;
    out.q = w.q;
    return out;
  }
  return out;
}

std::vector<PartnerStep> partner_orbit(std::int64_t d, int steps) {
  const TauCertificate cert = build_gtilde(d);
  const Integer dd = big(d);
  LatticeVector x = extended_from_mukai(MukaiVector{1, 1, dd / 2, dd});
  std::vector<PartnerStep> out;
  for (int k = 0; k <= steps; ++k) {
    if (k > 0) x = cert.glued.apply(x);
    MukaiVector v = mukai_from_extended(x, dd);
    if (v.r < 0) v = MukaiVector{-v.r, -v.c, -v.s, dd};
    out.push_back({v, decompose_mukai(v)});
  }
  return out;
}

std::string special_case_name(SpecialCase kind) {
  switch (kind) {
    case SpecialCase::N3Prime:
      return "n3_prime";
    case SpecialCase::N4Prime:
      return "n4_prime";
    case SpecialCase::N5Equiv:
      return "n5_equiv";
    case SpecialCase::ThreestarImpliesF:
      return "threestar_implies_F";
  }
  return "unknown";
}

ScanReport special_case_checks(std::int64_t d_from, std::int64_t d_to, SpecialCase kind) {
  ScanReport rep;
  rep.kind = special_case_name(kind);
  rep.d_from = d_from;
  rep.d_to = d_to;
  for (std::int64_t d = std::max<std::int64_t>(d_from, 6); d <= d_to; ++d) {
    if (!tau_extended(d)) continue;
    const std::int64_t m = d / 6;
    const std::string tag = "d=" + std::to_string(d) + ": ";
    switch (kind) {
      case SpecialCase::N3Prime:
        if (!is_prime(m) || (m % 8 != 5 && m % 8 != 7)) continue;
        ++rep.checked;
        if (!hilb_birational(d, 3).birational) rep.counterexamples.push_back(tag + "Hilb^3 not birational");
        break;
      case SpecialCase::N4Prime:
        if (!is_prime(m) || m % 4 != 1) continue;
        ++rep.checked;
        if (!hilb_birational(d, 4).birational) rep.counterexamples.push_back(tag + "Hilb^4 not birational");
        break;
      case SpecialCase::N5Equiv: {
        ++rep.checked;
        bool two = hilb_birational(d, 2).birational, five = hilb_birational(d, 5).birational;
        if (two != five)
          rep.counterexamples.push_back(tag + "n=2 gives " + (two ? "true" : "false") + ", n=5 gives " +
                                        (five ? "true" : "false"));
        break;
      }
      case SpecialCase::ThreestarImpliesF:
        if (!cond_threestar(d).holds) continue;
        ++rep.checked;
        if (!hilb_birational(d, 2).birational) rep.counterexamples.push_back(tag + "threestar holds but F is unsolvable");
        break;
    }
  }
  return rep;
}

}  // namespace k3tau
