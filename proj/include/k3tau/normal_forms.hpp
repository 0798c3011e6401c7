#pragma once

#include <optional>
#include <vector>

#include "k3tau/matrix.hpp"

namespace k3tau {

/// Smith normal form with accumulated unimodular transforms: left * input * right == diagonal.
///
/// Pivoting is deterministic: the entry of smallest nonzero absolute value in the
/// active block, ties broken by lowest row index and then lowest column index.
/// The invariant factors on the diagonal are non-negative and each divides the next.
struct SmithForm {
  Matrix left;
  Matrix diagonal;
  Matrix right;
  std::vector<Integer> invariants;  // diagonal entries, length min(rows, cols)
};

SmithForm smith_normal_form(const Matrix& input);

/// Row-style Hermite normal form with the unimodular transform (transform * input == hermite).
/// Pivots are positive, entries above a pivot lie in [0, pivot), zero rows sit at the bottom.
struct HermiteForm {
  Matrix hermite;
  Matrix transform;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const Matrix& input);

std::size_t rank(const Matrix& m);

/// Basis (as columns) of the integer kernel {x in Z^n : a x = 0}, in a canonical
/// Hermite-reduced form so the basis is reproducible.
Matrix integer_kernel(const Matrix& a);

/// An integer solution y of a y = t, or nullopt when none exists.
std::optional<Vector> solve_integer(const Matrix& a, const Vector& t);

/// True iff the columns are linearly independent and span a saturated sublattice of Z^n.
bool columns_primitive(const Matrix& columns);

}  // namespace k3tau
