#include <gtest/gtest.h>

#include <algorithm>

#include "k3tau/conditions.hpp"
#include "k3tau/hilbert.hpp"

using namespace k3tau;

TEST(NSHilb2, Gram) {
  Lattice l = ns_hilb2(42);
  EXPECT_EQ(l.gram(), matrix_from({{42, 0}, {0, -2}}));
  EXPECT_EQ(l.signature(), (Signature{1, 1}));
}

TEST(ClassesOfSquare, Examples) {
  // 2^2 * 42 - 2 * 9^2 = 6
  auto six = classes_of_square(42, 6, 10, 100);
  EXPECT_NE(std::find(six.begin(), six.end(), NSClass{2, 9, 42}), six.end());
  EXPECT_NE(std::find(six.begin(), six.end(), NSClass{2, -9, 42}), six.end());
  for (const auto& c : six) EXPECT_EQ(c.square(), 6);
  // 62 - 2 * 36 = -10, divisibility gcd(62, 12) = 2
  auto walls = classes_of_square(62, -10, 10, 100, Integer(2));
  EXPECT_NE(std::find(walls.begin(), walls.end(), NSClass{1, 6, 62}), walls.end());
  EXPECT_EQ(walls.front(), (NSClass{1, -6, 62}));
  EXPECT_TRUE(classes_of_square(42, -10, 50, 500, Integer(2)).empty());
}

TEST(UniqueModel, ThreeDividesD) {
  for (long d : {12, 18, 42, 78, 438}) {
    UniqueModelReport r = hilb2_unique_model(d);
    EXPECT_TRUE(r.conclusive) << d;
    EXPECT_TRUE(r.unique) << d;
    EXPECT_TRUE(r.candidates.empty());
  }
  UniqueModelReport w = hilb2_unique_model(62);
  EXPECT_FALSE(w.conclusive);
  EXPECT_EQ(w.verdict, "wall candidate found");
  EXPECT_NE(std::find(w.candidates.begin(), w.candidates.end(), NSClass{1, 6, 62}), w.candidates.end());
  EXPECT_THROW(hilb2_unique_model(6), InadmissibleDegree);
  EXPECT_THROW(hilb2_unique_model(43), InadmissibleDegree);
}

TEST(DecomposeMukai, Examples) {
  MukaiDecomposition a = decompose_mukai({3, 1, 7, 42});
  EXPECT_EQ(a.p, 1);
  EXPECT_EQ(a.q, 1);
  EXPECT_EQ(a.r, 3);
  EXPECT_EQ(a.s, 7);
  MukaiDecomposition b = decompose_mukai({12, 2, 13, 78});
  EXPECT_EQ(b.p, 2);
  EXPECT_EQ(b.q, 1);
  EXPECT_EQ(b.r, 3);
  EXPECT_EQ(b.s, 13);
  MukaiDecomposition c = decompose_mukai({3, -1, 7, 42});
  EXPECT_EQ(c.q, -1);
  EXPECT_THROW(decompose_mukai({1, 0, 0, 42}), std::invalid_argument);
  EXPECT_THROW(decompose_mukai({3, 1, 8, 42}), std::invalid_argument);
  EXPECT_THROW(decompose_mukai({6, 2, 14, 42}), std::invalid_argument);
  EXPECT_THROW(decompose_mukai({-3, 1, -7, 42}), std::invalid_argument);
}

TEST(ModuliIso, Examples) {
  EXPECT_TRUE(moduli_iso(3, 7, 7, 3));
  EXPECT_TRUE(moduli_iso(3, 7, 3, 7));
  EXPECT_FALSE(moduli_iso(3, 7, 1, 21));
  EXPECT_THROW(moduli_iso(3, 7, 2, 10), std::invalid_argument);
  EXPECT_THROW(moduli_iso(0, 7, 7, 0), std::invalid_argument);
}

TEST(HilbBirational, Examples) {
  HilbVerdict a = hilb_birational(78, 2);
  EXPECT_TRUE(a.birational);
  EXPECT_EQ(a.equation, "F");
  EXPECT_EQ(a.p, 2);
  EXPECT_EQ(a.q, 1);
  EXPECT_EQ(a.scope, "Picard rank 1");
  EXPECT_FALSE(hilb_birational(438, 2).birational);
  HilbVerdict c = hilb_birational(42, 3);
  EXPECT_TRUE(c.birational);
  EXPECT_EQ(c.equation, "F1");
  EXPECT_EQ(c.p, 1);
  EXPECT_EQ(c.q, 1);
  HilbVerdict d = hilb_birational(438, 3);
  EXPECT_EQ(d.equation, "F3");
  EXPECT_EQ(d.p, 7);
  EXPECT_EQ(d.q, 1);
  EXPECT_THROW(hilb_birational(42, 1), std::invalid_argument);
  EXPECT_THROW(hilb_birational(48, 2), InadmissibleDegree);
}

TEST(HilbBirational, EquationText) {
  EXPECT_EQ(equation_text(78, 2, "F"), "3p^2 - 13q^2 = -1");
  EXPECT_EQ(equation_text(42, 3, "F1"), "6p^2 - 7q^2 = -1");
  EXPECT_EQ(equation_text(42, 3, "F2"), "3p^2 - 14q^2 = -1");
  EXPECT_EQ(equation_text(438, 3, "F3"), "3p^2 - 146q^2 = 1");
}

TEST(HilbBirational, AgreesWithSmallSearch) {
  // any solution with p, q <= 50 must be found, and the reported witness must solve its branch
  for (long d = 12; d <= 900; d += 6) {
    if (!tau_extended(d)) continue;
    const long m = d / 6;
    for (long n = 2; n <= 6; ++n) {
      HilbVerdict v = hilb_birational(d, n);
      bool small = false;
      for (long p = 0; p <= 50 && !small; ++p)
        for (long q = 0; q <= 50 && !small; ++q) {
          const long a = 3 * (n - 1) * p * p - m * q * q;
          const long b = 3 * p * p - m * (n - 1) * q * q;
          small = a == -1 || b == -1 || b == 1;
        }
      if (small) EXPECT_TRUE(v.birational) << d << " " << n;
      if (!v.birational) continue;
      const Integer p2 = v.p * v.p, q2 = v.q * v.q;
      if (v.equation == "F" || v.equation == "F1")
        EXPECT_EQ(3 * (n - 1) * p2 - m * q2, -1) << d << " " << n;
      else if (v.equation == "F2")
        EXPECT_EQ(3 * p2 - m * (n - 1) * q2, -1) << d << " " << n;
      else
        EXPECT_EQ(3 * p2 - m * (n - 1) * q2, 1) << d << " " << n;
    }
  }
}

TEST(PartnerOrbit, TauSwapsTheTwoModels) {
  for (long d : {42, 78, 438}) {
    auto orbit = partner_orbit(d, 2);
    ASSERT_EQ(orbit.size(), 3u);
    EXPECT_EQ(orbit[0].vector, (MukaiVector{1, 1, d / 2, d}));
    EXPECT_EQ(orbit[1].decomposition.r * orbit[1].decomposition.s, d / 2);
    EXPECT_TRUE(moduli_iso(orbit[1].decomposition.r, orbit[1].decomposition.s, 3, d / 6));
    EXPECT_EQ(orbit[2].vector, orbit[0].vector);
  }
}

TEST(SpecialCases, SmallRanges) {
  EXPECT_TRUE(special_case_checks(12, 3000, SpecialCase::ThreestarImpliesF).ok());
  EXPECT_TRUE(special_case_checks(12, 3000, SpecialCase::N4Prime).ok());
  EXPECT_TRUE(special_case_checks(12, 3000, SpecialCase::N3Prime).ok());
  EXPECT_EQ(special_case_name(SpecialCase::N5Equiv), "n5_equiv");
  ScanReport n5 = special_case_checks(12, 200, SpecialCase::N5Equiv);
  ASSERT_FALSE(n5.ok());
  // d = 24: 3p^2 - 4q^2 = -1 has (1, 1), but 12p^2 - 4q^2 = -1 and 3p^2 - 16q^2 = -1 do not
  EXPECT_EQ(n5.counterexamples.front().substr(0, 5), "d=24:");
  for (const auto& c : n5.counterexamples) EXPECT_EQ((std::stoll(c.substr(2)) / 6) % 8, 4) << c;
}
