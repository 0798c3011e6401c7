#include <gtest/gtest.h>

#include <random>

#include "k3tau/normal_forms.hpp"

using namespace k3tau;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST(Smith, KnownInvariants) {
  SmithForm s = smith_normal_form(matrix_from({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(s.invariants, (std::vector<Integer>{2, 6, 12}));
  SmithForm z = smith_normal_form(Matrix(2, 3));
  EXPECT_EQ(z.invariants, (std::vector<Integer>{0, 0}));
}

TEST(Smith, TransformsAndDivisibilityOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    Matrix m = random_matrix(rng, r, c, 9);
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.left * m * s.right, s.diagonal);
    EXPECT_EQ(abs(determinant(s.left)), 1);
    EXPECT_EQ(abs(determinant(s.right)), 1);
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) {
      EXPECT_GE(s.invariants[i], 0);
      if (s.invariants[i] != 0) EXPECT_EQ(mod(s.invariants[i + 1], s.invariants[i]), 0);
    }
    if (r == c) {
      Integer prod = 1;
      for (const auto& x : s.invariants) prod *= x;
      EXPECT_EQ(prod, abs(determinant(m)));
    }
  }
}

TEST(Smith, Deterministic) {
  Matrix m = matrix_from({{4, 6}, {6, 4}});
  SmithForm a = smith_normal_form(m), b = smith_normal_form(m);
  EXPECT_EQ(a.left, b.left);
  EXPECT_EQ(a.right, b.right);
}

TEST(Hermite, ShapeAndTransform) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m = random_matrix(rng, 3, 4, 6);
    HermiteForm h = hermite_normal_form(m);
    EXPECT_EQ(h.transform * m, h.hermite);
    EXPECT_EQ(abs(determinant(h.transform)), 1);
    EXPECT_EQ(h.rank, rank(m));
    std::size_t col = 0;
    for (std::size_t i = 0; i < h.rank; ++i) {
      while (h.hermite(i, col) == 0) ++col;
      EXPECT_GT(h.hermite(i, col), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h.hermite(k, col), 0);
        EXPECT_LT(h.hermite(k, col), h.hermite(i, col));
      }
    }
  }
}

TEST(Kernel, IsSaturatedAndAnnihilated) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(rng, 2, 5, 5);
    Matrix k = integer_kernel(a);
    EXPECT_EQ(k.cols(), 5 - rank(a));
    EXPECT_EQ(a * k, Matrix(2, k.cols()));
    EXPECT_TRUE(columns_primitive(k));
  }
}

TEST(SolveInteger, FindsOrRefuses) {
  Matrix a = matrix_from({{2, 0}, {0, 3}});
  auto y = solve_integer(a, to_vector({4, 9}));
  ASSERT_TRUE(y);
  EXPECT_EQ(a * *y, to_vector({4, 9}));
  EXPECT_FALSE(solve_integer(a, to_vector({1, 0})));
  EXPECT_FALSE(columns_primitive(matrix_from({{2}, {0}})));
  EXPECT_FALSE(columns_primitive(matrix_from({{1, 2}, {1, 2}})));
}
