#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace k3tau {

using Integer = mpz_class;
using Rational = mpq_class;

using Vector = std::vector<Integer>;
using QVector = std::vector<Rational>;

/// Lattice coordinates of a vector, in the basis of the lattice it lives in.
using LatticeVector = Vector;

// Floor division and non-negative remainder; `m` must be nonzero.
Integer floor_div(const Integer& a, const Integer& m);
Integer mod(const Integer& a, const Integer& m);

/// Reduces a rational into [0, m) for a positive integer modulus.
Rational mod_rational(const Rational& r, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Vector& values);

/// Bezout coefficients: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

bool is_integral(const Rational& r);

/// Decimal representation, used by the table and CSV writers.
std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

Vector to_vector(std::initializer_list<long> values);

}  // namespace k3tau
