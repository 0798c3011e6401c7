#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3tau/matrix.hpp"

namespace k3tau {

// Error hierarchy for lattice operations. Each failure mode has its own type so
// callers (and tests) can tell a dependent input from a non-primitive one.
struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : LatticeError {
  using LatticeError::LatticeError;
};
struct DegenerateForm : LatticeError {
  using LatticeError::LatticeError;
};
struct DegenerateComplement : LatticeError {
  using LatticeError::LatticeError;
};
struct LinearlyDependent : LatticeError {
  using LatticeError::LatticeError;
};
struct NotPrimitive : LatticeError {
  using LatticeError::LatticeError;
};
struct NotIsometry : LatticeError {
  using LatticeError::LatticeError;
};
struct NotUnimodular : LatticeError {
  using LatticeError::LatticeError;
};
/// Raised when a construction that is guaranteed to succeed does not.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A free Z-module of finite rank with a nondegenerate symmetric integral form.
/// Equality is identity of Gram matrices; labels are for reporting only.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(Matrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Integer determinant() const { return determinant_; }
  bool is_unimodular() const { return abs(determinant_) == 1; }
  bool is_even() const;
  Signature signature() const;

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Basis vector carrying `label`; throws std::out_of_range if absent.
  LatticeVector unit(std::string_view label) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
  std::vector<std::string> labels_;
  Integer determinant_ = 1;
};

/// An automorphism of a lattice, acting on coordinate columns: x -> matrix * x.
class Isometry {
 public:
  Isometry() = default;
  /// Throws NotIsometry unless matrix^T gram matrix == gram and det = +-1.
  Isometry(Lattice domain, Matrix matrix);

  static Isometry identity(const Lattice& domain);

  const Lattice& domain() const { return domain_; }
  const Matrix& matrix() const { return matrix_; }

  LatticeVector apply(const LatticeVector& x) const { return matrix_ * x; }
  /// (this o other)(x) = this(other(x)).
  Isometry compose(const Isometry& other) const;
  Isometry inverse() const;

 private:
  Lattice domain_;
  Matrix matrix_;
};

enum class StandardName { U, E8Negative, A2, A2Negative };

Lattice standard_lattice(StandardName name);
/// Z(n): rank one with generator of square n. Rejects n = 0.
Lattice rank_one(const Integer& n);

Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice twist(const Lattice& lattice, const Integer& factor);

Integer pairing(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y);
Integer square(const Lattice& lattice, const LatticeVector& x);

bool is_isometry(const Lattice& lattice, const Matrix& m);

/// Positive generator of the ideal {(x, y) : y in lattice}. Rejects x = 0.
Integer divisibility(const Lattice& lattice, const LatticeVector& x);

/// Gram matrix of the sublattice spanned by the columns of `basis`.
Lattice sublattice(const Lattice& lattice, const Matrix& basis, std::vector<std::string> labels = {});

struct Complement {
  Lattice lattice;
  Matrix embedding;  // columns: basis of the complement, in ambient coordinates
};

/// Orthogonal complement of the span of `sub` (one vector per column).
/// `sub` must be linearly independent (LinearlyDependent) and primitive (NotPrimitive);
/// a complement with degenerate form raises DegenerateComplement.
Complement orthogonal_complement(const Lattice& lattice, const Matrix& sub);
Complement orthogonal_complement(const Lattice& lattice, const std::vector<LatticeVector>& sub);

/// Expresses `ambient_map` (acting on ambient coordinates and preserving the span of
/// `basis`) in the coordinates of `basis`.
Matrix restrict_to_basis(const Matrix& ambient_map, const Matrix& basis);

}  // namespace k3tau
