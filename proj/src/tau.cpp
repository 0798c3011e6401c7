#include "k3tau/tau.hpp"

#include "k3tau/conditions.hpp"
#include "k3tau/normal_forms.hpp"

namespace k3tau {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

std::vector<std::string> e8_labels() {
  std::vector<std::string> out;
  for (const char* p : {"a", "b"})
    for (int i = 1; i <= 8; ++i) out.push_back(p + std::to_string(i));
  return out;
}

Integer sixth(std::int64_t d) { return Integer(static_cast<long>(d / 6)); }

// Lambda_d inside the extended lattice: E8(-1)^2, U1, U2 and m_d = e3 - (d/2) f3.
Matrix lambda_d_basis(const Lattice& amb, const Integer& d) {
  std::vector<LatticeVector> cols;
  for (const auto& l : e8_labels()) cols.push_back(amb.unit(l));
  for (const char* l : {"e1", "f1", "e2", "f2"}) cols.push_back(amb.unit(l));
  cols.push_back(m_d(amb, d));
  return columns(cols);
}

// g on Lambda_d transported through an explicit isometry Lambda_d -> K_d^perp.
Matrix transported_g(std::int64_t d, const Integer& a, const Integer& b, const Matrix& n_gram) {
  const Lattice cub = lattice_cubic();
  const Integer m = sixth(d);
  const LatticeVector vprime = add(cub.unit("e2"), scale(cub.unit("f2"), m));
  const LatticeVector alpha = add(cub.unit("z1"), scale(cub.unit("z2"), -1));
  const LatticeVector beta = add(cub.unit("z2"), scale(cub.unit("z3"), -1));
  const LatticeVector e = add(vprime, add(scale(alpha, a), scale(beta, b)));
  check(square(cub, e) == 0, "eisenstein vector is not isotropic");

  auto [g1, s1, t1] = extended_gcd(pairing(cub, e, vprime), pairing(cub, e, alpha));
  auto [g, s2, t2] = extended_gcd(g1, pairing(cub, e, beta));
  check(g == 1, "isotropic vector is not unimodular in its plane");
  LatticeVector y = add(scale(vprime, s2 * s1), add(scale(alpha, s2 * t1), scale(beta, t2)));
  Integer y2 = square(cub, y);
  LatticeVector f = add(y, scale(e, -(y2 / 2)));

  const Matrix b3 = columns({vprime, alpha, beta});
  const Lattice l3 = sublattice(cub, b3);
  const Matrix ef = coordinates_in_basis(b3, columns({e, f}));
  const Complement w3 = orthogonal_complement(l3, ef);
  const LatticeVector w = b3 * w3.embedding.col(0);
  check(square(cub, w) == -Integer(static_cast<long>(d)), "complement of the hyperbolic plane has the wrong square");

  std::vector<LatticeVector> cols;
  for (const auto& l : e8_labels()) cols.push_back(cub.unit(l));
  cols.push_back(cub.unit("e1"));
  cols.push_back(cub.unit("f1"));
  cols.push_back(e);
  cols.push_back(f);
  cols.push_back(w);
  const Matrix k = columns(cols);
  check(sublattice(cub, k).gram() == n_gram, "K_d^perp basis does not match Lambda_d");
  return restrict_to_basis(build_g().matrix(), k);
}

// Identity on E8(-1)^2 + U1, and u (with f4 -> -f2) on (e2, m_d, f2).
Matrix substitute_g(std::int64_t d) {
  const Matrix u = build_u(d).matrix();
  const Matrix p = matrix_from({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  const Matrix up = p * u * p;
  Matrix a = Matrix::identity(21);
  const std::size_t idx[3] = {18, 20, 19};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(idx[i], idx[j]) = up(i, j);
  return a;
}

}  // namespace

Integer MukaiVector::self_pairing() const { return c * c * d - 2 * r * s; }

bool MukaiVector::primitive() const { return gcd(gcd(r, c), s) == 1; }

Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
  if (v.d != w.d) throw std::invalid_argument("Mukai vectors over different degrees");
  return v.c * w.c * v.d - v.r * w.s - w.r * v.s;
}

std::string to_string(const MukaiVector& v) {
  std::string c;
  if (v.c == 0)
    c = "0";
  else if (v.c == 1)
    c = "L";
  else if (v.c == -1)
    c = "-L";
  else
    c = to_string(v.c) + "L";
  return "(" + to_string(v.r) + ", " + c + ", " + to_string(v.s) + ")";
}

MukaiVector mukai_from_extended(const LatticeVector& x, const Integer& d) {
  static const Lattice amb = lattice_k3_extended();
  const Integer r = x.at(*amb.index_of("e4"));
  const Integer t = x.at(*amb.index_of("f4"));
  const Integer c = x.at(*amb.index_of("e3"));
  LatticeVector expect = add(add(scale(amb.unit("e4"), r), scale(ell_d(amb, d), c)), scale(amb.unit("f4"), t));
  if (expect != x) throw std::invalid_argument("vector is not in the span of e4, ell_d, f4");
  return MukaiVector{r, c, -t, d};
}

LatticeVector extended_from_mukai(const MukaiVector& v) {
  static const Lattice amb = lattice_k3_extended();
  return add(add(scale(amb.unit("e4"), v.r), scale(ell_d(amb, v.d), v.c)), scale(amb.unit("f4"), -v.s));
}

Isometry build_g() {
  const Lattice cub = lattice_cubic();
  Matrix g = Matrix::identity(cub.rank());
  for (const char* l : {"e1", "f1", "e2", "f2"}) {
    std::size_t i = *cub.index_of(l);
    g(i, i) = -1;
  }
  return Isometry(cub, g);
}

Lattice ell_plus_u4(const Integer& d) {
  Matrix g(3, 3);
  g(0, 2) = g(2, 0) = 1;
  g(1, 1) = d;
  return Lattice(g, {"e4", "ell", "f4"});
}

Isometry build_u(std::int64_t d) {
  require_tau_extended(d);
  const Integer dd = static_cast<long>(d);
  const Integer m = sixth(d);
  const Integer t = (m - 1) / 3;
  const Integer d3 = dd / 3;
  Matrix u(3, 3);
  // columns: images of e4, ell_d, f4
  u(0, 0) = -m;
  u(1, 0) = -t;
  u(2, 0) = t * (m - 1);
  u(0, 1) = dd;
  u(1, 1) = d3 - 1;
  u(2, 1) = -d3 * (m - 1);
  u(0, 2) = 3;
  u(1, 2) = 1;
  u(2, 2) = -m;
  return Isometry(ell_plus_u4(dd), u);
}

Complement kd_perp(std::int64_t d) {
  return orthogonal_complement(lattice_cubic(), std::vector<LatticeVector>{h_vector(), v_d(static_cast<long>(d))});
}

std::optional<std::pair<Integer, Integer>> eisenstein_representation(const Integer& m) {
  if (m <= 0) return std::nullopt;
  for (Integer b = 0; 3 * b * b <= 4 * m; ++b) {
    Integer disc = 4 * m - 3 * b * b;
    if (!is_square(disc)) continue;
    Integer s = isqrt(disc);
    for (Integer num : {Integer(b + s), Integer(b - s)}) {
      if (num < 0 || mpz_odd_p(num.get_mpz_t())) continue;
      Integer a = num / 2;
      if (gcd(a, b) == 1) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

TauCertificate build_gtilde(std::int64_t d) {
  require_tau_extended(d);
  const Integer dd = static_cast<long>(d);
  const Integer m = sixth(d);
  const Lattice amb = lattice_k3_extended();
  const Matrix n = lambda_d_basis(amb, dd);
  const Matrix n_gram = sublattice(amb, n).gram();
  const Isometry u = build_u(d);

  TauCertificate cert;
  cert.d = d;
  cert.u_matrix = u.matrix();
  cert.g_matrix = build_g().matrix();
  cert.lambda_d_basis = n;
  if (tau_strict(d)) {
    auto ab = eisenstein_representation(m);
    check(ab.has_value(), "no primitive Eisenstein representation of d/6");
    cert.eisenstein = ab;
    cert.realization = "eisenstein";
    cert.lambda_d_action = transported_g(d, ab->first, ab->second, n_gram);
  } else {
    cert.realization = "substitute";
    cert.lambda_d_action = substitute_g(d);
  }
  const Lattice lambda_d(n_gram);
  check(is_isometry(lambda_d, cert.lambda_d_action), "g on Lambda_d is not an isometry");
  cert.disc_multiplier = mod(*induced_disc_map(lambda_d, cert.lambda_d_action).multiplier, dd);
  check(cert.disc_multiplier == mod(dd / 3 - 1, dd), "g acts on Disc Lambda_d by the wrong multiplier");

  const LatticeVector ell = ell_d(amb, dd);
  const LatticeVector e4 = amb.unit("e4");
  const LatticeVector f4 = amb.unit("f4");
  const Matrix t = columns({e4, ell, f4});
  const Complement comp = orthogonal_complement(amb, n);
  const Matrix& h = comp.embedding;
  const Matrix c = coordinates_in_basis(t, h);
  const Matrix g2 = coordinates_in_basis(h, t * cert.u_matrix * c);

  GlueResult glue = glue_extends(amb, n, cert.lambda_d_action, g2);
  check(glue.extends && glue.certificate.has_value(), "g and u do not glue");
  cert.glued = *glue.certificate;

  const Matrix& mg = cert.glued.matrix();
  check(mg * mg == Matrix::identity(amb.rank()), "glued isometry is not an involution");
  check(mg * n == n * cert.lambda_d_action, "glued isometry does not restrict to g");
  check(mg * t == t * cert.u_matrix, "glued isometry does not restrict to u");
  const LatticeVector image_f4 = mg * f4;
  check(image_f4 == add(add(scale(e4, 3), ell), scale(f4, -m)), "glued isometry moves f4 to the wrong vector");

  cert.v = mukai_from_extended(image_f4, dd);
  cert.L_tau = mukai_from_extended(mg * ell, dd);
  return cert;
}

MukaiVector mukai_vector_of_tau(std::int64_t d) {
  require_tau_extended(d);
  const Integer dd = static_cast<long>(d);
  MukaiVector v{3, 1, sixth(d), dd};
  check(build_gtilde(d).v == v, "image of f4 differs from (3, L, d/6)");
  return v;
}

MukaiVector tau_polarization(std::int64_t d) {
  require_tau_extended(d);
  const Integer dd = static_cast<long>(d);
  const Integer d3 = dd / 3;
  MukaiVector lt{dd, d3 - 1, d3 * (sixth(d) - 1), dd};
  MukaiVector v{3, 1, sixth(d), dd};
  check(mukai_pairing(v, lt) == 0, "(v, L^tau) != 0");
  check(lt.self_pairing() == dd, "(L^tau)^2 != d");
  return lt;
}

std::optional<MukaiVector> fine_moduli_witness(const MukaiVector& v) {
  const Integer cd = v.c * v.d;
  if (gcd(gcd(cd, v.r), v.s) != 1) return std::nullopt;
  const Integer g = gcd(v.r, v.s);
  MukaiVector w{0, 0, 0, v.d};
  if (g == 0) {
    // r = s = 0 and cd = +-1
    w.c = cd;
  } else {
    if (g != 1) {
      auto [one, inv, unused] = extended_gcd(mod(cd, g), g);
      (void)unused;
      check(one == 1, "cd is not a unit modulo gcd(r, s)");
      w.c = mod(inv, g);
    }
    // r x4 + s x0 = cd a - 1
    auto [gg, sr, ss] = extended_gcd(v.r, v.s);
    const Integer k = (cd * w.c - 1) / gg;
    Integer x4 = sr * k;
    Integer x0 = ss * k;
    if (v.r != 0) {
      Integer rr = v.r / gg, sss = v.s / gg;
      if (rr < 0) {
        rr = -rr;
        sss = -sss;
      }
      Integer q = floor_div(x0, rr);
      x0 -= q * rr;
      x4 += q * sss;
    }
    w.r = x0;
    w.s = x4;
  }
  check(mukai_pairing(v, w) == 1, "fine moduli witness does not pair to 1");
  return w;
}

TauReport verify_tau(std::int64_t d) {
  require_tau_extended(d);
  TauReport rep;
  rep.d = d;
  const Integer dd = static_cast<long>(d);
  const Lattice cub = lattice_cubic();
  const Isometry g = build_g();
  const LatticeVector h = h_vector();
  const LatticeVector v = v_d(dd);
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

  if (g.apply(h) != h) fail("g(h) != h");
  if (g.apply(v) != scale(v, -1)) fail("g(v_d) != -v_d");
  if (square(cub, v) != -dd / 3) fail("v_d^2 != -d/3");

  const Lattice kd = sublattice(cub, columns({h, v}));
  rep.kd_invariants = DiscriminantGroup(kd).orders();
  const Complement comp = kd_perp(d);
  rep.complement_rank = comp.lattice.rank();
  if (rep.complement_rank != 21) fail("K_d^perp does not have rank 21");
  DiscriminantGroup group(comp.lattice);
  rep.complement_invariants = group.orders();
  if (!(group.cyclic() && group.orders()[0] == dd)) fail("Disc K_d^perp is not cyclic of order d");

  const Matrix restricted = restrict_to_basis(g.matrix(), comp.embedding);
  DiscMap action = induced_disc_map(comp.lattice, restricted);
  rep.expected = mod(dd / 3 - 1, dd);
  rep.multiplier = action.multiplier ? mod(*action.multiplier, dd) : Integer(-1);
  if (rep.multiplier != rep.expected)
    fail("multiplier " + to_string(rep.multiplier) + " != d/3 - 1 = " + to_string(rep.expected));
  rep.ok = rep.failures.empty();
  return rep;
}

MultiplierAnalysis analyze_multipliers(std::int64_t d) {
  require_tau_extended(d);
  const Integer dd = static_cast<long>(d);
  const Complement comp = kd_perp(d);
  DiscriminantGroup group(comp.lattice);
  check(group.cyclic() && group.orders()[0] == dd, "Disc K_d^perp is not cyclic of order d");

  MultiplierAnalysis out;
  out.d = d;
  for (const Integer& alpha : {mod(Integer(-1), dd), Integer(dd / 3 - 1), Integer(2 * dd / 3 - 1)}) {
    MultiplierCandidate c;
    c.alpha = alpha;
    c.order_three = dd / gcd(mod(alpha + 1, dd), dd) == 3;
    c.preserves_q = preserves_quadratic_form(group, scalar_disc_map(group, alpha));
    out.candidates.push_back(c);
  }
  const Matrix restricted = restrict_to_basis(build_g().matrix(), comp.embedding);
  out.induced = mod(*induced_disc_map(comp.lattice, restricted).multiplier, dd);
  return out;
}

}  // namespace k3tau
