#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "k3tau/arith.hpp"

namespace k3tau {

/// A degree outside the range an operation is defined for. The message names the failed condition.
struct InadmissibleDegree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
bool is_prime(std::int64_t n);

/// d > 6 and d = 0, 2 mod 6.
bool cond_star(std::int64_t d);
/// d even, and not divisible by 4, 9 or any odd prime p = 2 mod 3.
bool cond_twostar(std::int64_t d);

struct ThreeStarWitness {
  Integer a;
  Integer n;
};

/// a^2 d = 2(n^2 + n + 1) for some a >= 1, n >= 2. The witness has least n.
struct ThreeStar {
  bool holds = false;
  std::optional<ThreeStarWitness> witness;
};
/// Throws InadmissibleDegree for odd or non-positive d.
ThreeStar cond_threestar(std::int64_t d);

bool tau_strict(std::int64_t d);
bool tau_extended(std::int64_t d);

struct DClassification {
  std::int64_t d = 0;
  bool star = false;
  bool twostar = false;
  ThreeStar threestar;
  bool tau_strict = false;
  bool tau_extended = false;
};

/// Throws InadmissibleDegree unless d is positive and even.
DClassification classify_d(std::int64_t d);

/// Throws InadmissibleDegree naming the failed congruence unless d = 0 mod 6 and d/6 = 1 mod 3.
void require_tau_extended(std::int64_t d);

}  // namespace k3tau
