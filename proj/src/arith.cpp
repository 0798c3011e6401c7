#include "k3tau/arith.hpp"

#include <stdexcept>

namespace k3tau {

Integer floor_div(const Integer& a, const Integer& m) {
  if (m == 0) throw std::domain_error("floor_div: zero divisor");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}

Integer mod(const Integer& a, const Integer& m) {
  if (m == 0) throw std::domain_error("mod: zero modulus");
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Rational mod_rational(const Rational& r, const Integer& m) {
  if (m <= 0) throw std::domain_error("mod: modulus must be positive");
  Rational scaled = r / Rational(m);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational out = r - Rational(fl * m);
  out.canonicalize();
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer gcd(const Vector& values) {
  Integer g = 0;
  for (const Integer& v : values) g = gcd(g, v);
  return g;
}

std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {g, s, t};
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Vector to_vector(std::initializer_list<long> values) {
  Vector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace k3tau
