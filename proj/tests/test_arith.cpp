#include <gtest/gtest.h>

#include "k3tau/arith.hpp"
#include "k3tau/matrix.hpp"

using namespace k3tau;

TEST(Arith, FloorDivAndMod) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(mod(-7, 5), 3);
  EXPECT_EQ(mod(7, -5), 2);
  EXPECT_EQ(mod_rational(Rational(-1, 3), 2), Rational(5, 3));
}

TEST(Arith, GcdFamily) {
  EXPECT_EQ(gcd(Integer(-12), Integer(18)), 6);
  EXPECT_EQ(gcd(Integer(0), Integer(0)), 0);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
  EXPECT_EQ(gcd(to_vector({6, 10, 15})), 1);
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      auto [g, s, t] = extended_gcd(a, b);
      EXPECT_EQ(g, gcd(Integer(a), Integer(b)));
      EXPECT_EQ(Integer(s * a + t * b), g);
    }
}

TEST(Arith, Squares) {
  EXPECT_EQ(isqrt(Integer("1000000000000000000000000")), Integer("1000000000000"));
  EXPECT_TRUE(is_square(0));
  EXPECT_TRUE(is_square(144));
  EXPECT_FALSE(is_square(-4));
  EXPECT_FALSE(is_square(143));
}

TEST(Matrix, ProductAndTranspose) {
  Matrix a = matrix_from({{1, 2}, {3, 4}});
  Matrix b = matrix_from({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, matrix_from({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), matrix_from({{1, 3}, {2, 4}}));
  EXPECT_EQ(a * to_vector({1, -1}), to_vector({-1, -1}));
  EXPECT_THROW(a * Matrix(3, 3), std::invalid_argument);
}

TEST(Matrix, DeterminantAndInverse) {
  Matrix a = matrix_from({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  EXPECT_EQ(determinant(a), 4);
  QMatrix inv = inverse(to_rational(a));
  EXPECT_EQ(to_rational(a) * inv, QMatrix::identity(3));
  EXPECT_THROW(inverse(to_rational(matrix_from({{1, 2}, {2, 4}}))), std::domain_error);
  EXPECT_EQ(determinant(Matrix(0, 0)), 1);
}

TEST(Matrix, CoordinatesInBasis) {
  Matrix basis = matrix_from({{1, 0}, {1, 2}});
  Matrix v = matrix_from({{3}, {7}});
  EXPECT_EQ(basis * coordinates_in_basis(basis, v), v);
  EXPECT_THROW(coordinates_in_basis(basis, matrix_from({{0}, {1}})), std::domain_error);
}
