#include "k3tau/lattice.hpp"

#include <algorithm>

#include "k3tau/normal_forms.hpp"

namespace k3tau {

namespace {

void require_length(const Lattice& lattice, const LatticeVector& x) {
  if (x.size() != lattice.rank())
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " in a lattice of rank " +
                            std::to_string(lattice.rank()));
}

}  // namespace

Lattice::Lattice(Matrix gram, std::vector<std::string> labels) : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.is_square()) throw DimensionMismatch("Gram matrix must be square");
  if (gram_.transpose() != gram_) throw LatticeError("Gram matrix must be symmetric");
  if (!labels_.empty() && labels_.size() != gram_.rows()) throw DimensionMismatch("one label per basis vector");
  determinant_ = k3tau::determinant(gram_);
  if (determinant_ == 0) throw DegenerateForm("Gram matrix is degenerate");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

Signature Lattice::signature() const {
  // diagonalize by congruence over Q
  QMatrix a = to_rational(gram_);
  const std::size_t n = rank();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        a.swap_rows(k, p);
        a.swap_cols(k, p);
      } else {
        std::size_t q = k + 1;
        while (q < n && a(k, q) == 0) ++q;
        if (q == n) throw InternalError("signature: unexpected degenerate form");
        // e_k -> e_k + e_q makes the diagonal entry 2 a(k, q)
        a.add_row_multiple(k, q, 1);
        a.add_col_multiple(k, q, 1);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = -a(i, k) / a(k, k);
      a.add_row_multiple(i, k, f);
      a.add_col_multiple(i, k, f);
    }
    if (a(k, k) > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

std::optional<std::size_t> Lattice::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

LatticeVector Lattice::unit(std::string_view label) const {
  auto idx = index_of(label);
  if (!idx) throw std::out_of_range("no basis vector labelled " + std::string(label));
  LatticeVector x(rank(), Integer(0));
  x[*idx] = 1;
  return x;
}

Isometry::Isometry(Lattice domain, Matrix matrix) : domain_(std::move(domain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != domain_.rank() || matrix_.cols() != domain_.rank())
    throw DimensionMismatch("isometry matrix does not match the lattice rank");
  if (!is_isometry(domain_, matrix_)) throw NotIsometry("matrix does not preserve the form");
}

Isometry Isometry::identity(const Lattice& domain) { return Isometry(domain, Matrix::identity(domain.rank())); }

Isometry Isometry::compose(const Isometry& other) const {
  if (!(other.domain_ == domain_)) throw DimensionMismatch("composing isometries of different lattices");
  return Isometry(domain_, matrix_ * other.matrix_);
}

Isometry Isometry::inverse() const {
  auto inv = to_integer(k3tau::inverse(to_rational(matrix_)));
  if (!inv) throw InternalError("isometry with non-integral inverse");
  return Isometry(domain_, *inv);
}

Lattice standard_lattice(StandardName name) {
  switch (name) {
    case StandardName::U:
      return Lattice(matrix_from({{0, 1}, {1, 0}}), {"e", "f"});
    case StandardName::A2:
      return Lattice(matrix_from({{2, -1}, {-1, 2}}), {"l1", "l2"});
    case StandardName::A2Negative:
      return Lattice(matrix_from({{-2, 1}, {1, -2}}), {"l1", "l2"});
    case StandardName::E8Negative: {
      // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4
      Matrix g(8, 8);
      const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
      for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
      std::vector<std::string> labels;
      for (int i = 1; i <= 8; ++i) labels.push_back("r" + std::to_string(i));
      return Lattice(g, labels);
    }
  }
  throw std::invalid_argument("unknown standard lattice");
}

Lattice rank_one(const Integer& n) {
  if (n == 0) throw DegenerateForm("Z(0) is degenerate");
  Matrix g(1, 1);
  g(0, 0) = n;
  return Lattice(g, {"x"});
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  std::vector<Matrix> blocks;
  std::vector<std::string> labels;
  bool labelled = true;
  for (const auto& p : parts) {
    blocks.push_back(p.gram());
    if (p.labels().empty() && p.rank() > 0) labelled = false;
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  }
  if (!labelled) labels.clear();
  return Lattice(block_diagonal(blocks), labels);
}

Lattice twist(const Lattice& lattice, const Integer& factor) {
  if (factor == 0) throw DegenerateForm("twist by zero is degenerate");
  Matrix g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= factor;
  return Lattice(g, lattice.labels());
}

Integer pairing(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y) {
  require_length(lattice, x);
  require_length(lattice, y);
  return dot(x, lattice.gram() * y);
}

Integer square(const Lattice& lattice, const LatticeVector& x) { return pairing(lattice, x, x); }

bool is_isometry(const Lattice& lattice, const Matrix& m) {
  if (m.rows() != lattice.rank() || m.cols() != lattice.rank())
    throw DimensionMismatch("matrix size does not match the lattice rank");
  if (m.transpose() * lattice.gram() * m != lattice.gram()) return false;
  // Preserving a nondegenerate form forces det = +-1; checked anyway.
  return abs(determinant(m)) == 1;
}

Integer divisibility(const Lattice& lattice, const LatticeVector& x) {
  require_length(lattice, x);
  if (std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; }))
    throw std::invalid_argument("divisibility of the zero vector");
  return gcd(lattice.gram() * x);
}

Lattice sublattice(const Lattice& lattice, const Matrix& basis, std::vector<std::string> labels) {
  if (basis.rows() != lattice.rank()) throw DimensionMismatch("basis vectors must have ambient length");
  return Lattice(basis.transpose() * lattice.gram() * basis, std::move(labels));
}

Complement orthogonal_complement(const Lattice& lattice, const Matrix& sub) {
  if (sub.rows() != lattice.rank()) throw DimensionMismatch("sublattice vectors must have ambient length");
  if (rank(sub) != sub.cols()) throw LinearlyDependent("sublattice generators are linearly dependent");
  if (!columns_primitive(sub)) throw NotPrimitive("sublattice generators do not span a primitive sublattice");
  Matrix constraints = sub.transpose() * lattice.gram();
  Matrix basis = integer_kernel(constraints);
  Matrix gram = basis.transpose() * lattice.gram() * basis;
  if (determinant(gram) == 0) throw DegenerateComplement("orthogonal complement is degenerate");
  return Complement{Lattice(gram), basis};
}

Complement orthogonal_complement(const Lattice& lattice, const std::vector<LatticeVector>& sub) {
  for (const auto& v : sub) require_length(lattice, v);
  return orthogonal_complement(lattice, Matrix::from_columns(sub, lattice.rank()));
}

Matrix restrict_to_basis(const Matrix& ambient_map, const Matrix& basis) {
  return coordinates_in_basis(basis, ambient_map * basis);
}

}  // namespace k3tau
