#include <gtest/gtest.h>

#include "k3tau/k3_lattices.hpp"
#include "k3tau/lattice.hpp"
#include "k3tau/normal_forms.hpp"

using namespace k3tau;

TEST(StandardLattice, Grams) {
  EXPECT_EQ(standard_lattice(StandardName::U).gram(), matrix_from({{0, 1}, {1, 0}}));
  Lattice a2 = standard_lattice(StandardName::A2);
  EXPECT_EQ(a2.gram(), matrix_from({{2, -1}, {-1, 2}}));
  EXPECT_EQ(a2.determinant(), 3);
  EXPECT_EQ(rank_one(-42).gram(), matrix_from({{-42}}));
  EXPECT_THROW(rank_one(0), DegenerateForm);
  Lattice e8 = standard_lattice(StandardName::E8Negative);
  EXPECT_EQ(e8.rank(), 8u);
  EXPECT_EQ(e8.determinant(), 1);
  EXPECT_TRUE(e8.is_even());
  EXPECT_EQ(e8.signature(), (Signature{0, 8}));
}

TEST(StandardLattice, RejectsBadGram) {
  EXPECT_THROW(Lattice(matrix_from({{1, 2}, {3, 4}})), LatticeError);
  EXPECT_THROW(Lattice(matrix_from({{1, 1}, {1, 1}})), DegenerateForm);
}

TEST(DirectSum, RankDetLabels) {
  Lattice u = standard_lattice(StandardName::U);
  Lattice uu = direct_sum({u, u});
  EXPECT_EQ(uu.rank(), 4u);
  EXPECT_EQ(uu.determinant(), 1);
  EXPECT_EQ(direct_sum({}).rank(), 0u);
  Lattice cub = lattice_cubic();
  EXPECT_EQ(cub.rank(), 23u);
  EXPECT_EQ(cub.signature(), (Signature{2, 21}));
  EXPECT_FALSE(cub.is_even());
  EXPECT_EQ(abs(cub.determinant()), 1);
}

TEST(Twist, ScalesTheForm) {
  EXPECT_EQ(twist(standard_lattice(StandardName::U), -1).gram(), matrix_from({{0, -1}, {-1, 0}}));
  EXPECT_EQ(twist(standard_lattice(StandardName::A2), -1).gram(), matrix_from({{-2, 1}, {1, -2}}));
  EXPECT_EQ(twist(rank_one(1), -42), rank_one(-42));
  EXPECT_THROW(twist(rank_one(1), 0), DegenerateForm);
}

TEST(Pairing, Examples) {
  Lattice u = standard_lattice(StandardName::U);
  EXPECT_EQ(pairing(u, to_vector({1, 0}), to_vector({0, 1})), 1);
  Lattice k3 = lattice_k3();
  EXPECT_EQ(square(k3, ell_d(k3, 42)), 42);
  EXPECT_EQ(square(lattice_cubic(), v_d(42)), -14);
  EXPECT_THROW(pairing(u, to_vector({1}), to_vector({0, 1})), DimensionMismatch);
}

TEST(K3Lattices, Invariants) {
  EXPECT_EQ(lattice_k3().rank(), 22u);
  EXPECT_EQ(lattice_k3().signature(), (Signature{3, 19}));
  EXPECT_TRUE(lattice_k3().is_unimodular());
  EXPECT_EQ(lattice_k3_extended().signature(), (Signature{4, 20}));
  EXPECT_EQ(lattice_mukai().signature(), (Signature{4, 20}));
  const Lattice ext = lattice_k3_extended();
  Matrix a2 = a2_embedding();
  EXPECT_EQ(sublattice(ext, a2).gram(), matrix_from({{2, -1}, {-1, 2}}));
}

TEST(IsIsometry, Examples) {
  Lattice u = standard_lattice(StandardName::U);
  EXPECT_TRUE(is_isometry(u, Matrix::identity(2)));
  EXPECT_TRUE(is_isometry(u, matrix_from({{-1, 0}, {0, -1}})));
  Matrix swap = matrix_from({{0, 1}, {1, 0}});
  Matrix dbl = matrix_from({{2, 0}, {0, 1}});
  EXPECT_FALSE(is_isometry(u, swap * dbl));
  EXPECT_THROW(is_isometry(u, Matrix::identity(3)), DimensionMismatch);
  EXPECT_THROW(Isometry(u, dbl), NotIsometry);
}

TEST(Complement, EllDInK3) {
  for (long d : {2, 42, 78, 438}) {
    Complement c = lattice_degree(d);
    EXPECT_EQ(c.lattice.rank(), 21u);
    EXPECT_EQ(abs(c.lattice.determinant()), d);
    EXPECT_TRUE(columns_primitive(c.embedding));
    for (std::size_t j = 0; j < c.embedding.cols(); ++j)
      EXPECT_EQ(pairing(lattice_k3(), c.embedding.col(j), ell_d(lattice_k3(), d)), 0);
  }
}

TEST(Complement, OfHInZMinusOneCubed) {
  Lattice z3 = direct_sum({rank_one(-1), rank_one(-1), rank_one(-1)});
  Complement c = orthogonal_complement(z3, std::vector<LatticeVector>{to_vector({1, 1, 1})});
  EXPECT_EQ(c.lattice.rank(), 2u);
  EXPECT_EQ(c.lattice.determinant(), 3);
  // A2(-1): negative definite, even, determinant 3
  EXPECT_TRUE(c.lattice.is_even());
  EXPECT_EQ(c.lattice.signature(), (Signature{0, 2}));
  Complement cub0 = lattice_cubic_primitive();
  EXPECT_EQ(cub0.lattice.rank(), 22u);
  EXPECT_EQ(abs(cub0.lattice.determinant()), 3);
}

TEST(Complement, Errors) {
  Lattice u = standard_lattice(StandardName::U);
  EXPECT_THROW(orthogonal_complement(u, std::vector<LatticeVector>{to_vector({1, 0})}), DegenerateComplement);
  EXPECT_THROW(orthogonal_complement(u, std::vector<LatticeVector>{to_vector({2, 0})}), NotPrimitive);
  Lattice uu = direct_sum({u, u});
  EXPECT_THROW(orthogonal_complement(uu, std::vector<LatticeVector>{to_vector({1, 0, 0, 0}), to_vector({2, 0, 0, 0})}),
               LinearlyDependent);
}

TEST(Complement, SaturationIsANoOp) {
  Lattice k3 = lattice_k3();
  Complement c = lattice_degree(42);
  Complement again = orthogonal_complement(k3, orthogonal_complement(k3, c.embedding).embedding);
  EXPECT_EQ(again.embedding, c.embedding);
}

TEST(Divisibility, Examples) {
  Lattice u = standard_lattice(StandardName::U);
  EXPECT_EQ(divisibility(u, to_vector({1, 0})), 1);
  Lattice a2m = twist(standard_lattice(StandardName::A2), -1);
  EXPECT_EQ(divisibility(a2m, to_vector({1, -1})), 3);
  EXPECT_EQ(divisibility(lattice_cubic(), v_d(42)), 1);
  EXPECT_THROW(divisibility(u, to_vector({0, 0})), std::invalid_argument);
  Lattice k3 = lattice_k3();
  EXPECT_EQ(divisibility(k3, ell_d(k3, 42)), 1);
}

TEST(Isometry, ComposeAndInverse) {
  Lattice u = standard_lattice(StandardName::U);
  Isometry swap(u, matrix_from({{0, 1}, {1, 0}}));
  Isometry neg(u, matrix_from({{-1, 0}, {0, -1}}));
  EXPECT_EQ(swap.compose(neg).matrix(), matrix_from({{0, -1}, {-1, 0}}));
  EXPECT_EQ(swap.compose(swap.inverse()).matrix(), Matrix::identity(2));
  EXPECT_EQ(Isometry::identity(u).apply(to_vector({3, 4})), to_vector({3, 4}));
}
