#include <gtest/gtest.h>

#include "k3tau/conditions.hpp"
#include "k3tau/discriminant.hpp"
#include "k3tau/k3_lattices.hpp"
#include "k3tau/tau.hpp"

using namespace k3tau;

TEST(BuildG, FixesHNegatesVd) {
  Isometry g = build_g();
  EXPECT_EQ(g.apply(h_vector()), h_vector());
  EXPECT_EQ(g.apply(v_d(42)), scale(v_d(42), -1));
  EXPECT_EQ(g.matrix() * g.matrix(), Matrix::identity(23));
}

TEST(BuildU, Columns) {
  Isometry u = build_u(42);
  // basis (e4, ell_d, f4)
  EXPECT_EQ(u.matrix().col(2), to_vector({3, 1, -7}));
  EXPECT_EQ(u.matrix().col(1), to_vector({42, 13, -84}));
  EXPECT_EQ(u.matrix() * u.matrix(), Matrix::identity(3));
  EXPECT_THROW(build_u(48), InadmissibleDegree);
  EXPECT_THROW(build_u(44), InadmissibleDegree);
}

TEST(BuildU, InvolutionAndMultiplierUpTo10002) {
  for (long d = 6; d <= 10002; d += 6) {
    if (!tau_extended(d)) continue;
    Isometry u = build_u(d);
    ASSERT_EQ(u.matrix() * u.matrix(), Matrix::identity(3)) << d;
    EXPECT_EQ(mod(*induced_disc_map(u).multiplier, Integer(d)), d / 3 - 1) << d;
  }
}

TEST(BuildGtilde, Examples) {
  TauCertificate a = build_gtilde(42);
  EXPECT_EQ(a.disc_multiplier, 13);
  EXPECT_EQ(a.realization, "eisenstein");
  EXPECT_EQ(a.v, (MukaiVector{3, 1, 7, 42}));
  EXPECT_EQ(a.L_tau, (MukaiVector{42, 13, 84, 42}));
  TauCertificate b = build_gtilde(78);
  EXPECT_EQ(b.disc_multiplier, 25);
  TauCertificate c = build_gtilde(150);
  EXPECT_EQ(c.realization, "substitute");
  EXPECT_EQ(c.disc_multiplier, 49);
  EXPECT_THROW(build_gtilde(66), InadmissibleDegree);
}

TEST(BuildGtilde, CertificateIdentities) {
  const Lattice ext = lattice_k3_extended();
  for (long d : {6, 24, 42, 78, 114, 150, 438, 1014}) {
    TauCertificate c = build_gtilde(d);
    const Matrix& m = c.glued.matrix();
    EXPECT_TRUE(is_isometry(ext, m)) << d;
    EXPECT_EQ(m * m, Matrix::identity(24)) << d;
    EXPECT_EQ(m * c.lambda_d_basis, c.lambda_d_basis * c.lambda_d_action) << d;
    const Matrix t = columns({ext.unit("e4"), ell_d(ext, d), ext.unit("f4")});
    EXPECT_EQ(m * t, t * c.u_matrix) << d;
  }
}

TEST(Mukai, VectorOfTau) {
  EXPECT_EQ(mukai_vector_of_tau(42), (MukaiVector{3, 1, 7, 42}));
  EXPECT_EQ(mukai_vector_of_tau(78), (MukaiVector{3, 1, 13, 78}));
  EXPECT_EQ(to_string(mukai_vector_of_tau(42)), "(3, L, 7)");
  EXPECT_EQ(mukai_vector_of_tau(438).self_pairing(), 0);
  EXPECT_THROW(mukai_vector_of_tau(66), InadmissibleDegree);
}

TEST(Mukai, Polarization) {
  MukaiVector lt = tau_polarization(42);
  EXPECT_EQ(lt, (MukaiVector{42, 13, 84, 42}));
  EXPECT_EQ(to_string(lt), "(42, 13L, 84)");
  EXPECT_EQ(mukai_pairing(mukai_vector_of_tau(42), lt), 0);
  EXPECT_EQ(lt.self_pairing(), 42);
}

TEST(Mukai, ExtendedIdentification) {
  MukaiVector v{3, 1, 7, 42};
  LatticeVector x = extended_from_mukai(v);
  EXPECT_EQ(mukai_from_extended(x, 42), v);
  const Lattice ext = lattice_k3_extended();
  // f4 -> -f4 turns the U4 pairing into the Mukai one
  MukaiVector w{2, 0, -5, 42};
  EXPECT_EQ(pairing(ext, x, extended_from_mukai(w)), mukai_pairing(v, w));
  EXPECT_THROW(mukai_pairing(v, MukaiVector{1, 0, 0, 78}), std::invalid_argument);
}

TEST(Mukai, FineModuliWitness) {
  auto w = fine_moduli_witness({3, 1, 7, 42});
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (MukaiVector{2, 0, -5, 42}));
  auto w78 = fine_moduli_witness({3, 1, 13, 78});
  ASSERT_TRUE(w78);
  EXPECT_EQ(mukai_pairing({3, 1, 13, 78}, *w78), 1);
  EXPECT_FALSE(fine_moduli_witness({2, 0, 2, 42}));
}

TEST(Mukai, IdentitiesUpTo10002) {
  for (long d = 6; d <= 10002; d += 6) {
    if (!tau_extended(d)) continue;
    MukaiVector v{3, 1, d / 6, d};
    MukaiVector lt = tau_polarization(d);
    ASSERT_EQ(v.self_pairing(), 0);
    ASSERT_EQ(mukai_pairing(v, lt), 0);
    ASSERT_EQ(lt.self_pairing(), d);
    ASSERT_TRUE(v.primitive());
    auto w = fine_moduli_witness(v);
    ASSERT_TRUE(w);
    ASSERT_EQ(mukai_pairing(v, *w), 1);
  }
}

TEST(VerifyTau, Examples) {
  for (auto [d, mult] : {std::pair<long, long>{42, 13}, {78, 25}, {438, 145}}) {
    TauReport r = verify_tau(d);
    EXPECT_TRUE(r.ok) << d;
    EXPECT_EQ(r.complement_rank, 21u);
    EXPECT_EQ(r.multiplier, mult);
    EXPECT_EQ(r.complement_invariants, (std::vector<Integer>{d}));
  }
}

TEST(Multipliers, CaseAnalysis) {
  for (long d : {42, 78}) {
    MultiplierAnalysis a = analyze_multipliers(d);
    ASSERT_EQ(a.candidates.size(), 3u);
    // -1: fails the order 3 condition; q(-x) = q(x) always
    EXPECT_EQ(a.candidates[0].alpha, d - 1);
    EXPECT_FALSE(a.candidates[0].order_three);
    EXPECT_TRUE(a.candidates[0].preserves_q);
    EXPECT_EQ(a.candidates[1].alpha, d / 3 - 1);
    EXPECT_TRUE(a.candidates[1].admissible());
    EXPECT_EQ(a.candidates[2].alpha, 2 * d / 3 - 1);
    EXPECT_TRUE(a.candidates[2].order_three);
    EXPECT_FALSE(a.candidates[2].preserves_q);
    EXPECT_EQ(a.induced, d / 3 - 1);
  }
}

TEST(Eisenstein, Representations) {
  for (long m : {7, 13, 19, 73, 91}) {
    auto ab = eisenstein_representation(m);
    ASSERT_TRUE(ab) << m;
    auto [a, b] = *ab;
    EXPECT_EQ(a * a - a * b + b * b, m);
    EXPECT_EQ(gcd(a, b), 1);
  }
  EXPECT_FALSE(eisenstein_representation(25));
  EXPECT_FALSE(eisenstein_representation(4));
}

TEST(DiscAction, ConjugationPreservesMultiplier) {
  // f in O(Lambda_d): -1 on the Z(-d) summand is not the identity on Disc, but commutes with scalars
  TauCertificate c = build_gtilde(42);
  const Lattice ld = sublattice(lattice_k3_extended(), c.lambda_d_basis);
  Matrix f = Matrix::identity(ld.rank());
  f(20, 20) = -1;
  ASSERT_TRUE(is_isometry(ld, f));
  Matrix conj = f * c.lambda_d_action * f;
  EXPECT_EQ(mod(*induced_disc_map(ld, conj).multiplier, Integer(42)), 13);
}
