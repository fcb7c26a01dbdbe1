#include <gtest/gtest.h>

#include "isobgg/geometry.hpp"

using namespace isobgg;

TEST(BigCell, ParameterCount) {
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(BigCellPoint::zero(n).size(), 4 * (n - 2) + 3);
  EXPECT_THROW(BigCellPoint::zero(2), InvalidArgument);
}

TEST(BigCell, ZeroPoint) {
  auto m = big_cell_matrix(BigCellPoint::zero(4));
  for (int r = 0; r < 8; ++r) {
    EXPECT_EQ(m[static_cast<std::size_t>(r)][0], r == 0 ? 1 : 0);
    EXPECT_EQ(m[static_cast<std::size_t>(r)][1], r == 1 ? 1 : 0);
  }
}

TEST(BigCell, EntriesAtN3) {
  BigCellPoint p = BigCellPoint::zero(3);
  p.a(1, 3) = 2;
  p.a(2, 3) = -3;
  p.c(1, 3) = 5;
  p.c(2, 3) = 7;
  p.b1 = 11;
  p.b2 = 13;
  p.c12 = 17;
  auto m = big_cell_matrix(p);
  // s = a13 c23 - a23 c13 = 14 + 15
  Rational s = 29;
  EXPECT_EQ(m[2][0], 2);
  EXPECT_EQ(m[2][1], -3);
  EXPECT_EQ(m[3][0], 11);
  EXPECT_EQ(m[3][1], 17 - s / 2);
  EXPECT_EQ(m[4][0], 17 + s / 2);
  EXPECT_EQ(m[4][1], 13);
  EXPECT_EQ(m[5][0], 5);
  EXPECT_EQ(m[5][1], 7);
}

TEST(Isotropy, SimpleCases) {
  auto basis = [](int n, int i, int j) {
    RationalMatrix m(static_cast<std::size_t>(2 * n), std::vector<Rational>(2, 0));
    m[static_cast<std::size_t>(i - 1)][0] = 1;
    m[static_cast<std::size_t>(j - 1)][1] = 1;
    return m;
  };
  EXPECT_FALSE(isotropy_check(basis(3, 1, 4)));
  EXPECT_TRUE(isotropy_check(basis(3, 1, 2)));
  EXPECT_THROW(isotropy_check(basis(3, 1, 1)), InvalidArgument);
}

TEST(Isotropy, RandomPoints) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 6; ++n)
    for (int t = 0; t < 1000; ++t) ASSERT_TRUE(isotropy_check(big_cell_matrix(random_big_cell_point(n, rng))));
}

TEST(Isotropy, DetectsBrokenCorrection) {
  // dropping the half-sum correction breaks isotropy at generic points
  std::mt19937_64 rng(5);
  BigCellPoint p = random_big_cell_point(4, rng);
  auto m = big_cell_matrix(p);
  m[4][1] = p.c12;
  m[5][0] = p.c12;
  EXPECT_FALSE(isotropy_check(m));
}

TEST(Twistor, BasisVector) {
  std::vector<Rational> g(8, 0);
  g[0] = 1;
  EXPECT_EQ(twistor_cover_solve(g), BigCellPoint::zero(4));
}

TEST(Twistor, Reconstruction) {
  std::mt19937_64 rng(9);
  for (int n = 3; n <= 6; ++n)
    for (int t = 0; t < 1000; ++t) {
      std::vector<Rational> g(static_cast<std::size_t>(2 * n));
      for (auto &x : g) x = random_rational(rng);
      g[0] = 1;
      BigCellPoint p = twistor_cover_solve(g);
      ASSERT_EQ(p.b2, 0);
      ASSERT_EQ(cover_combination(p, 1, g[1]), g);
    }
}

TEST(Twistor, DeltaChart) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> d(10);
    for (auto &x : d) x = random_rational(rng);
    d[1] = 1;
    ASSERT_EQ(cover_combination(twistor_cover_solve_delta(d), d[0], 1), d);
  }
}

TEST(Twistor, RejectsWrongChart) {
  std::vector<Rational> g(6, 0);
  g[0] = 2;
  EXPECT_THROW(twistor_cover_solve(g), InvalidArgument);
  EXPECT_THROW(twistor_cover_solve(std::vector<Rational>(5, 1)), DimensionError);
}

TEST(Geometry, ReportIsDeterministic) {
  auto a = geometry_check(4, 50, 42), b = geometry_check(4, 50, 42);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.samples, b.samples);
}
