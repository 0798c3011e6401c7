#include "k3tau/discriminant.hpp"

#include "k3tau/normal_forms.hpp"

namespace k3tau {

namespace {

Rational pair_q(const Matrix& gram, const QVector& x, const QVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (gram(i, j) != 0) s += x[i] * Rational(gram(i, j)) * y[j];
  }
  return s;
}

QVector mat_times(const Matrix& m, const QVector& x) {
  QVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) y[i] += Rational(m(i, j)) * x[j];
  return y;
}

Integer unit_multiplier(const Matrix& m, const std::vector<Integer>& src, const std::vector<Integer>& dst) {
  return src.size() == 1 && dst.size() == 1 && src == dst ? mod(m(0, 0), src[0]) : Integer(-1);
}

}  // namespace

DiscriminantGroup::DiscriminantGroup(const Lattice& lattice) : gram_(lattice.gram()), even_(lattice.is_even()) {
  SmithForm sf = smith_normal_form(gram_);
  left_ = sf.left;
  for (std::size_t i = 0; i < sf.invariants.size(); ++i) {
    if (sf.invariants[i] == 1) continue;
    active_.push_back(i);
    orders_.push_back(sf.invariants[i]);
    QVector g(gram_.rows());
    for (std::size_t r = 0; r < gram_.rows(); ++r) g[r] = Rational(sf.right(r, i), sf.invariants[i]);
    for (auto& c : g) c.canonicalize();
    generators_.push_back(std::move(g));
  }
  const std::size_t k = orders_.size();
  bvalues_ = QMatrix(k, k);
  const Integer qmod = even_ ? 2 : 1;
  for (std::size_t i = 0; i < k; ++i) {
    qvalues_.push_back(mod_rational(pair_q(gram_, generators_[i], generators_[i]), qmod));
    for (std::size_t j = 0; j < k; ++j) bvalues_(i, j) = mod_rational(pair_q(gram_, generators_[i], generators_[j]), Integer(1));
  }
}

Integer DiscriminantGroup::order() const {
  Integer n = 1;
  for (const auto& o : orders_) n *= o;
  return n;
}

Vector DiscriminantGroup::coordinates(const QVector& x) const {
  if (x.size() != gram_.rows()) throw DimensionMismatch("discriminant coordinates: wrong length");
  auto gx = to_integer(mat_times(gram_, x));
  if (!gx) throw std::domain_error("vector is not in the dual lattice");
  Vector full = left_ * *gx;
  Vector out(orders_.size());
  for (std::size_t i = 0; i < active_.size(); ++i) out[i] = mod(full[active_[i]], orders_[i]);
  return out;
}

QVector DiscriminantGroup::element(const Vector& coords) const {
  QVector x(gram_.rows());
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t r = 0; r < x.size(); ++r) x[r] += Rational(coords[i]) * generators_[i][r];
  return x;
}

Rational DiscriminantGroup::q(const Vector& coords) const {
  QVector x = element(coords);
  return mod_rational(pair_q(gram_, x, x), Integer(even_ ? 2 : 1));
}

Vector DiscriminantGroup::reduce(const Vector& coords) const {
  Vector out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = mod(coords[i], orders_[i]);
  return out;
}

Vector DiscMap::apply(const Vector& coords) const {
  Vector y = matrix * coords;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod(y[i], target_orders[i]);
  return y;
}

bool operator==(const DiscMap& a, const DiscMap& b) {
  if (a.source_orders != b.source_orders || a.target_orders != b.target_orders) return false;
  for (std::size_t i = 0; i < a.matrix.rows(); ++i)
    for (std::size_t j = 0; j < a.matrix.cols(); ++j)
      if (mod(a.matrix(i, j), a.target_orders[i]) != mod(b.matrix(i, j), b.target_orders[i])) return false;
  return true;
}

DiscMap induced_disc_map(const Lattice& lattice, const Matrix& g) {
  if (!is_isometry(lattice, g)) throw NotIsometry("induced_disc_map: matrix is not an isometry");
  DiscriminantGroup group(lattice);
  const std::size_t k = group.orders().size();
  DiscMap out{group.orders(), group.orders(), Matrix(k, k), std::nullopt};
  for (std::size_t j = 0; j < k; ++j) out.matrix.set_col(j, group.coordinates(mat_times(g, group.generators()[j])));
  if (group.cyclic()) out.multiplier = out.matrix(0, 0);
  return out;
}

DiscMap induced_disc_map(const Isometry& g) { return induced_disc_map(g.domain(), g.matrix()); }

DiscMap compose(const DiscMap& outer, const DiscMap& inner) {
  if (outer.source_orders != inner.target_orders) throw DimensionMismatch("composing incompatible discriminant maps");
  DiscMap out{inner.source_orders, outer.target_orders, outer.matrix * inner.matrix, std::nullopt};
  for (std::size_t i = 0; i < out.matrix.rows(); ++i)
    for (std::size_t j = 0; j < out.matrix.cols(); ++j) out.matrix(i, j) = mod(out.matrix(i, j), out.target_orders[i]);
  Integer m = unit_multiplier(out.matrix, out.source_orders, out.target_orders);
  if (m >= 0) out.multiplier = m;
  return out;
}

DiscMap scalar_disc_map(const DiscriminantGroup& group, const Integer& alpha) {
  if (!group.cyclic()) throw std::invalid_argument("scalar_disc_map needs a cyclic group");
  Matrix m(1, 1);
  m(0, 0) = mod(alpha, group.orders()[0]);
  return DiscMap{group.orders(), group.orders(), m, m(0, 0)};
}

bool preserves_quadratic_form(const DiscriminantGroup& group, const DiscMap& map) {
  const std::size_t k = group.orders().size();
  if (map.source_orders != group.orders() || map.target_orders != group.orders())
    throw DimensionMismatch("map does not act on this discriminant group");
  std::vector<Vector> images;
  for (std::size_t j = 0; j < k; ++j) images.push_back(group.reduce(map.matrix.col(j)));
  for (std::size_t i = 0; i < k; ++i) {
    if (group.q(images[i]) != group.qvalues()[i]) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      Rational b = 0;
      // (x_i, x_j) through the generator pairing table
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c) b += Rational(images[i][a] * images[j][c]) * group.bvalues()(a, c);
      if (mod_rational(b, Integer(1)) != group.bvalues()(i, j)) return false;
    }
  }
  return true;
}

GlueResult glue_extends(const Lattice& ambient, const Matrix& sub_basis, const Matrix& g1, const Matrix& g2) {
  if (!ambient.is_unimodular()) throw NotUnimodular("gluing requires a unimodular ambient lattice");
  Complement comp = orthogonal_complement(ambient, sub_basis);
  const Matrix& s = sub_basis;
  const Matrix& e = comp.embedding;
  const Matrix& gram = ambient.gram();
  Lattice l1 = sublattice(ambient, s);
  const Lattice& l2 = comp.lattice;
  if (g1.rows() != l1.rank() || g1.cols() != l1.rank()) throw DimensionMismatch("g1 does not act on the sublattice");
  if (g2.rows() != l2.rank() || g2.cols() != l2.rank()) throw DimensionMismatch("g2 does not act on the complement");

  GlueResult out;
  out.sub_basis = s;
  out.complement_basis = e;
  out.action_sub = induced_disc_map(l1, g1);
  out.action_complement = induced_disc_map(l2, g2);

  DiscriminantGroup d1(l1);
  DiscriminantGroup d2(l2);
  if (d1.order() != d2.order()) throw InternalError("glue: discriminant orders of the two parts differ");

  const Matrix st_g = s.transpose() * gram;
  const Matrix et_g = e.transpose() * gram;
  const QMatrix g2_inv = inverse(to_rational(l2.gram()));
  const std::size_t k1 = d1.orders().size();
  out.glue = DiscMap{d1.orders(), d2.orders(), Matrix(d2.orders().size(), k1), std::nullopt};
  for (std::size_t j = 0; j < k1; ++j) {
    auto t = to_integer(mat_times(l1.gram(), d1.generators()[j]));
    if (!t) throw InternalError("glue: generator outside the dual lattice");
    auto y = solve_integer(st_g, *t);
    if (!y) throw InternalError("glue: no ambient lift of a discriminant generator");
    QVector w(l2.rank());
    Vector ety = et_g * *y;
    for (std::size_t r = 0; r < w.size(); ++r)
      for (std::size_t c = 0; c < ety.size(); ++c) w[r] += g2_inv(r, c) * Rational(ety[c]);
    out.glue.matrix.set_col(j, d2.coordinates(w));
  }

  out.extends = compose(out.glue, out.action_sub) == compose(out.action_complement, out.glue);

  Matrix b = hstack(s, e);
  QMatrix block = to_rational(block_diagonal({g1, g2}));
  QMatrix bq = to_rational(b);
  auto m = to_integer(bq * block * inverse(bq));
  if (m.has_value() != out.extends)
    throw InternalError("glue: discriminant criterion disagrees with integrality of the glued matrix");
  if (m) out.certificate = Isometry(ambient, *m);
  return out;
}

}  // namespace k3tau
