#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"

using namespace crnt;
using namespace crnt::testing;

namespace {

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int density_percent = 60) {
  std::uniform_int_distribution<int> coin(0, 99), val(-4, 4);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) < density_percent) {
        m(i, j) = Rational(val(rng), 1 + coin(rng) % 3);
        m(i, j).canonicalize();
      }
  return m;
}

// Random low-rank matrix: product of two thin factors.
RationalMatrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_matrix(rng, rows, k, 80) * random_matrix(rng, k, cols, 80);
}

Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    Rational term = m(0, c) * cofactor_det(minor);
    d += (c % 2 == 0) ? term : Rational(-term);
  }
  return d;
}

RationalMatrix futile_gamma() { return to_rational(build_matrices(load_network("futile_cycle.crn")).Gamma); }

void expect_canonical(const SubspaceBasis& b) {
  for (const auto& v : b.vectors()) {
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    ASSERT_NE(first, v.end());
    EXPECT_GT(*first, 0);
    Integer g = 0;
    for (const auto& q : v) {
      EXPECT_EQ(q.get_den(), 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    }
    EXPECT_EQ(g, 1);
  }
}

}  // namespace

TEST(Rank, Examples) {
  RationalMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  EXPECT_EQ(rank(id), 3u);
  EXPECT_EQ(rank(RationalMatrix(4, 5)), 0u);
  EXPECT_EQ(rank(futile_gamma()), 3u);
}

TEST(Rank, AgreesWithGaussianOracle) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> d(1, 7);
    std::size_t r = d(rng), c = d(rng);
    RationalMatrix m = t % 2 ? random_matrix(rng, r, c) : random_low_rank(rng, r, c, 1 + t % 3);
    ASSERT_EQ(rank(m), oracle_rank(m));
  }
}

TEST(Rank, RankNullity) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> d(1, 7);
    std::size_t r = d(rng), c = d(rng);
    RationalMatrix m = random_low_rank(rng, r, c, 1 + t % 4);
    SubspaceBasis k = kernel_basis(m);
    ASSERT_EQ(rank(m) + k.dim(), c);
    for (const auto& v : k.vectors()) ASSERT_TRUE(is_zero(m * v));
  }
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    RationalMatrix m = random_matrix(rng, n, n, 70);
    ASSERT_EQ(determinant(m), cofactor_det(m));
  }
}

TEST(Kernel, Examples) {
  auto lv = to_rational(build_matrices(load_network("lotka_volterra.crn")).Gamma);
  EXPECT_EQ(kernel_basis(lv).dim(), 1u);
  EXPECT_EQ(kernel_basis(lv).vectors()[0], (RatVec{1, 1, 1}));
  SubspaceBasis k = kernel_basis(futile_gamma());
  EXPECT_EQ(k.dim(), 3u);
  for (const auto& v : k.vectors()) EXPECT_TRUE(is_zero(futile_gamma() * v));
  expect_canonical(k);
  RationalMatrix full = RationalMatrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(kernel_basis(full).dim(), 0u);
}

TEST(Kernel, RawFormHasUnitFreeColumns) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    RationalMatrix m = random_low_rank(rng, 4, 6, 2);
    std::vector<std::size_t> free;
    auto raw = kernel_raw(m, &free);
    ASSERT_EQ(raw.size(), free.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      EXPECT_TRUE(is_zero(m * raw[i]));
      for (std::size_t j = 0; j < free.size(); ++j) EXPECT_EQ(raw[i][free[j]], Rational(i == j ? 1 : 0));
    }
  }
}

TEST(SolveCoords, Examples) {
  auto b = SubspaceBasis::span_of(3, {{1, 0, 1}, {0, 1, 1}});
  auto c = solve_coords(b, b.vectors()[0]);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (RatVec{1, 0}));
  EXPECT_FALSE(solve_coords(b, {0, 0, 1}));
  auto d = solve_coords(b, {2, -3, -1});
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (RatVec{2, -3}));
}

TEST(SolveCoords, RecoversRandomCombinations) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    RationalMatrix g = random_matrix(rng, 3, 6, 80);
    std::vector<RatVec> gens{g.row(0), g.row(1), g.row(2)};
    auto b = SubspaceBasis::span_of(6, gens);
    RatVec target(6, Rational(0));
    for (const auto& v : b.vectors()) {
      Rational c = random_positive_rational(rng);
      for (std::size_t i = 0; i < 6; ++i) target[i] += c * v[i];
    }
    auto coords = solve_coords(b, target);
    ASSERT_TRUE(coords);
    RatVec back(6, Rational(0));
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t i = 0; i < 6; ++i) back[i] += (*coords)[j] * b.vectors()[j][i];
    EXPECT_EQ(back, target);
  }
}

TEST(SolveLinear, FindsSolutionOrReportsNone) {
  auto a = RationalMatrix::from_rows({{1, 1}, {2, 2}});
  auto x = solve_linear(a, {3, 6});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (RatVec{3, 6}));
  EXPECT_FALSE(solve_linear(a, {3, 5}));
}

TEST(Intersect, Examples) {
  auto a = SubspaceBasis::span_of(3, {{1, 2, 3}, {0, 1, 1}});
  EXPECT_EQ(intersect(a, a).dim(), 2u);
  auto x = SubspaceBasis::span_of(2, {{1, 0}});
  auto y = SubspaceBasis::span_of(2, {{0, 1}});
  EXPECT_EQ(intersect(x, y).dim(), 0u);
  EXPECT_THROW(intersect(a, x), DimensionError);

  auto s = build_matrices(load_network("futile_cycle.crn"));
  auto ker_y = kernel_basis(to_rational(s.Y));
  auto im_ia = column_space(to_rational(s.Ia));
  EXPECT_EQ(intersect(ker_y, im_ia).dim(), 1u);
}

TEST(Intersect, VectorsLieInBothSpans) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    auto ma = random_low_rank(rng, 6, 4, 3), mb = random_low_rank(rng, 6, 4, 3);
    auto a = column_space(ma), b = column_space(mb);
    auto c = intersect(a, b);
    for (const auto& v : c.vectors()) {
      EXPECT_TRUE(a.contains(v));
      EXPECT_TRUE(b.contains(v));
    }
    // Grassmann formula.
    EXPECT_EQ(c.dim() + sum(a, b).dim(), a.dim() + b.dim());
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(orthogonal_complement(SubspaceBasis::full(4)).dim(), 0u);
  EXPECT_EQ(orthogonal_complement(SubspaceBasis(3)).dim(), 3u);

  auto s = column_space(futile_gamma());
  auto w = orthogonal_complement(s);
  EXPECT_EQ(w.dim(), 3u);
  EXPECT_TRUE(w.contains(RatVec{0, 1, 1, 0, 0, 0}));

  auto line = SubspaceBasis::span_of(3, {{-1, -1, 1}});
  auto plane = orthogonal_complement(line);
  EXPECT_EQ(plane.dim(), 2u);
  for (const auto& v : plane.vectors()) EXPECT_EQ(dot(v, {-1, -1, 1}), 0);
}

TEST(Complement, IsAnInvolution) {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    auto a = column_space(random_low_rank(rng, 5, 4, 1 + t % 4));
    auto c = orthogonal_complement(a);
    EXPECT_EQ(a.dim() + c.dim(), 5u);
    for (const auto& u : a.vectors())
      for (const auto& v : c.vectors()) EXPECT_EQ(dot(u, v), 0);
    EXPECT_TRUE(orthogonal_complement(c).same_span(a));
  }
}

TEST(Basis, SpanOfIsCanonical) {
  auto a = SubspaceBasis::span_of(3, {{2, 4, 6}, {-1, 0, 1}});
  auto b = SubspaceBasis::span_of(3, {{0, 2, 4}, {1, 2, 3}, {3, 6, 9}});
  EXPECT_EQ(a.vectors(), b.vectors());
  expect_canonical(a);
  EXPECT_THROW(SubspaceBasis::from_independent(2, {{1, 1}, {2, 2}}), Error);
}

TEST(Basis, NormalizeIntegral) {
  EXPECT_EQ(normalize_integral({Rational(-1, 2), Rational(3, 4), 0}), (RatVec{2, -3, 0}));
  EXPECT_EQ(scale_integral({Rational(-1, 2), Rational(3, 4)}), (RatVec{-2, 3}));
}

TEST(Rref, PivotsAndShape) {
  auto m = RationalMatrix::from_rows({{0, 2, 4}, {1, 1, 1}, {1, 2, 3}});
  std::vector<std::size_t> piv;
  auto r = rref(m, &piv);
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.row(0), (RatVec{1, 0, -1}));
  EXPECT_EQ(r.row(1), (RatVec{0, 1, 2}));
  EXPECT_EQ(r.row(2), (RatVec{0, 0, 0}));
}

TEST(Lp, NonnegativeSolutions) {
  auto a = RationalMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
  auto x = find_nonnegative_solution(a, {1, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (RatVec{1, 1}));
  for (const auto& v : *x) EXPECT_GE(v, 0);
  auto b = RationalMatrix::from_rows({{1, 1}});
  EXPECT_FALSE(find_nonnegative_solution(b, {-1}));
}
