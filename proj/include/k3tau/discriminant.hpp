#pragma once

#include <optional>
#include <vector>

#include "k3tau/lattice.hpp"

namespace k3tau {

/// The finite group L^vee / L in invariant-factor form, with its finite form.
///
/// Generator i is column i of the Smith right transform divided by its order; an
/// element of L^vee is located by reducing left * gram * x modulo the orders.
class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(const Lattice& lattice);

  const std::vector<Integer>& orders() const { return orders_; }
  const std::vector<QVector>& generators() const { return generators_; }
  /// (g_i, g_i) mod 2 for even lattices, mod 1 otherwise.
  const std::vector<Rational>& qvalues() const { return qvalues_; }
  /// (g_i, g_j) mod 1.
  const QMatrix& bvalues() const { return bvalues_; }

  bool even() const { return even_; }
  Integer order() const;
  bool trivial() const { return orders_.empty(); }
  bool cyclic() const { return orders_.size() == 1; }

  /// Coordinates of x in L^vee (given in lattice coordinates) modulo the orders.
  /// Throws std::domain_error if x is not in the dual lattice.
  Vector coordinates(const QVector& x) const;
  /// A rational representative of the element with the given coordinates.
  QVector element(const Vector& coords) const;
  /// q of the element with these coordinates, reduced mod 2 (mod 1 for odd lattices).
  Rational q(const Vector& coords) const;
  Vector reduce(const Vector& coords) const;

 private:
  Matrix gram_;
  Matrix left_;
  std::vector<std::size_t> active_;  // Smith positions with order > 1
  std::vector<Integer> orders_;
  std::vector<QVector> generators_;
  std::vector<Rational> qvalues_;
  QMatrix bvalues_;
  bool even_ = true;
};

/// A homomorphism of discriminant groups. Column j holds the image of generator j.
struct DiscMap {
  std::vector<Integer> source_orders;
  std::vector<Integer> target_orders;
  Matrix matrix;
  /// For a cyclic group mapped to itself: the unit alpha with x -> alpha x.
  std::optional<Integer> multiplier;

  Vector apply(const Vector& coords) const;
  friend bool operator==(const DiscMap& a, const DiscMap& b);
};

DiscMap induced_disc_map(const Lattice& lattice, const Matrix& g);
DiscMap induced_disc_map(const Isometry& g);
DiscMap compose(const DiscMap& outer, const DiscMap& inner);
/// Multiplication by `alpha` on a cyclic group.
DiscMap scalar_disc_map(const DiscriminantGroup& group, const Integer& alpha);

/// True iff the map preserves the finite quadratic form (b-values mod 1 and q-values mod 2,
/// or mod 1 for odd lattices) on the generators.
bool preserves_quadratic_form(const DiscriminantGroup& group, const DiscMap& map);

struct GlueResult {
  bool extends = false;
  /// Discriminant isomorphism from the sublattice to its complement (columns in complement coordinates).
  DiscMap glue;
  DiscMap action_sub;
  DiscMap action_complement;
  /// The glued isometry of the ambient lattice, present iff `extends`.
  std::optional<Isometry> certificate;
  Matrix sub_basis;
  Matrix complement_basis;
};

/// Decides whether g1 (on the span of `sub_basis`, in those coordinates) and g2 (on the
/// orthogonal complement, in the Hermite basis returned by orthogonal_complement) glue to
/// an isometry of the unimodular ambient lattice.
GlueResult glue_extends(const Lattice& ambient, const Matrix& sub_basis, const Matrix& g1, const Matrix& g2);

}  // namespace k3tau
