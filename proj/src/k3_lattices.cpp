#include "k3tau/k3_lattices.hpp"

namespace k3tau {

namespace {

Lattice relabel(const Lattice& l, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= l.rank(); ++i) labels.push_back(prefix + std::to_string(i));
  return Lattice(l.gram(), labels);
}

Lattice plane(int index, int sign = 1) {
  Lattice u = twist(standard_lattice(StandardName::U), sign);
  return Lattice(u.gram(), {"e" + std::to_string(index), "f" + std::to_string(index)});
}

Lattice e8_pair() {
  Lattice e8 = standard_lattice(StandardName::E8Negative);
  return direct_sum({relabel(e8, "a"), relabel(e8, "b")});
}

Integer exact_div(const Integer& d, long k, const char* what) {
  if (!mpz_divisible_ui_p(d.get_mpz_t(), k)) throw std::invalid_argument(what);
  return d / k;
}

}  // namespace

Lattice lattice_k3() { return direct_sum({e8_pair(), plane(1), plane(2), plane(3)}); }

Lattice lattice_k3_extended() { return direct_sum({lattice_k3(), plane(4)}); }

Lattice lattice_mukai() { return direct_sum({lattice_k3(), plane(4, -1)}); }

Lattice lattice_cubic() {
  Lattice z = rank_one(-1);
  return direct_sum({e8_pair(), plane(1), plane(2), Lattice(z.gram(), {"z1"}), Lattice(z.gram(), {"z2"}),
                     Lattice(z.gram(), {"z3"})});
}

Complement lattice_cubic_primitive() { return orthogonal_complement(lattice_cubic(), std::vector<LatticeVector>{h_vector()}); }

LatticeVector ell_d(const Lattice& lattice, const Integer& d) {
  Integer half = exact_div(d, 2, "ell_d needs even d");
  return add(lattice.unit("e3"), scale(lattice.unit("f3"), half));
}

LatticeVector m_d(const Lattice& lattice, const Integer& d) {
  Integer half = exact_div(d, 2, "m_d needs even d");
  return add(lattice.unit("e3"), scale(lattice.unit("f3"), -half));
}

LatticeVector h_vector() {
  Lattice c = lattice_cubic();
  return add(add(c.unit("z1"), c.unit("z2")), c.unit("z3"));
}

LatticeVector v_d(const Integer& d) {
  Integer sixth = exact_div(d, 6, "v_d needs 6 | d");
  Lattice c = lattice_cubic();
  return add(c.unit("e2"), scale(c.unit("f2"), -sixth));
}

Matrix a2_embedding() {
  Lattice l = lattice_k3_extended();
  LatticeVector l1 = add(l.unit("e3"), l.unit("f3"));
  LatticeVector l2 = add(add(l.unit("e4"), l.unit("f4")), scale(l.unit("e3"), -1));
  return columns({l1, l2});
}

Complement lattice_degree(const Integer& d) {
  Lattice k3 = lattice_k3();
  return orthogonal_complement(k3, std::vector<LatticeVector>{ell_d(k3, d)});
}

Matrix columns(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return Matrix();
  return Matrix::from_columns(vectors, vectors.front().size());
}

}  // namespace k3tau
