// Equivalence of the scalar and AVX2 grid kernels against each other and
// against exact rational evaluation.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symq/forms.hpp"
#include "symq/grid_eval.hpp"

namespace symq {
namespace {

struct Batch {
  std::vector<std::int32_t> coords;
  std::vector<Point> points;
};

Batch random_batch(std::mt19937_64& rng, std::size_t n, std::size_t count, std::int32_t bound) {
  Batch b{std::vector<std::int32_t>(n * count), std::vector<Point>(count, Point(n))};
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto x = static_cast<std::int32_t>(rng() % (2 * bound + 1)) - bound;
      b.coords[v * count + p] = x;
      b.points[p][v] = Rational(static_cast<long>(x));
    }
  }
  return b;
}

TEST(IntegerForm, ScalesToCommonDenominator) {
  Polynomial f(2);
  f.add_term(Monomial{2, 0}, Rational(1, 2));
  f.add_term(Monomial{0, 2}, Rational(-2, 3));
  const auto form = to_integer_form(f, 2);
  ASSERT_TRUE(form.has_value());
  EXPECT_EQ(form->coeffs, (std::vector<std::int32_t>{3, -4}));
}

TEST(IntegerForm, RejectsOverflowingRanges) {
  Polynomial big(1);
  big.add_term(Monomial{1}, Rational(1L << 40));
  EXPECT_FALSE(to_integer_form(big, 1).has_value());
  EXPECT_FALSE(to_integer_form(pow(Polynomial::variable(1, 0), 40), 2).has_value());
  EXPECT_TRUE(to_integer_form(make_L(8), 2).has_value());
}

TEST(GridKernels, ScalarMatchesExactEvaluation) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Polynomial f = oracle::random_polynomial(rng, n, 6, 12, 50);
    const auto form = to_integer_form(f, 3);
    ASSERT_TRUE(form.has_value());
    const std::size_t count = 1 + rng() % 40;
    const Batch b = random_batch(rng, n, count, 3);
    std::vector<std::int64_t> out(count);
    eval_batch_scalar(*form, b.coords, count, out);
    for (std::size_t p = 0; p < count; ++p) {
      ASSERT_EQ(Rational(static_cast<long>(out[p])), eval(f, b.points[p]));
    }
  }
}

TEST(GridKernels, Avx2MatchesScalarBitForBit) {
  if (!avx2_available()) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(52);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const Polynomial f = oracle::random_polynomial(rng, n, 8, 20, 1000);
    const std::int32_t bound = 1 + static_cast<std::int32_t>(rng() % 4);
    const auto form = to_integer_form(f, bound);
    if (!form) continue;
    // Counts straddle the 8-lane width to exercise the scalar tail.
    const std::size_t count = rng() % 70;
    const Batch b = random_batch(rng, n, count, bound);
    std::vector<std::int64_t> scalar(count), simd(count);
    eval_batch(*form, b.coords, count, scalar, GridKernel::Scalar);
    eval_batch(*form, b.coords, count, simd, GridKernel::Avx2);
    ASSERT_EQ(scalar, simd);
  }
}

TEST(GridKernels, ExtremeMagnitudesAgree) {
  if (!avx2_available()) GTEST_SKIP() << "AVX2 not available";
  // Coefficients near the int32 limit times monomials of 2^30.
  Polynomial f(2);
  f.add_term(Monomial{15, 0}, Rational(-2147483647L));
  f.add_term(Monomial{0, 15}, Rational(2147483647L));
  f.add_term(Monomial{2, 2}, Rational(-1234567));
  const auto form = to_integer_form(f, 4);
  ASSERT_TRUE(form.has_value());
  const std::size_t count = 9;
  std::vector<std::int32_t> coords{4, -4, 3, -3, 0, 1, -1, 2, -2, -4, 4, 4, -4, 0, 2, 2, 1, -3};
  std::vector<std::int64_t> scalar(count), simd(count);
  eval_batch(*form, coords, count, scalar, GridKernel::Scalar);
  eval_batch(*form, coords, count, simd, GridKernel::Avx2);
  EXPECT_EQ(scalar, simd);
  EXPECT_EQ(Rational(static_cast<long>(scalar[0])),
            eval(f, Point{Rational(4), Rational(-4)}));
}

TEST(GridSearch, FindsNegativeValueAndReportsFirstMinimum) {
  Polynomial f(2);  // x1^2 - 2 x2^2, minimum -8 at (0, +-2); first in order is (0, -2)
  f.add_term(Monomial{2, 0}, Rational(1));
  f.add_term(Monomial{0, 2}, Rational(-2));
  const std::vector<std::int32_t> grid{-2, -1, 0, 1, 2};
  for (const auto kernel : {GridKernel::Scalar, GridKernel::Auto}) {
    const auto r = grid_search(f, grid, kernel);
    EXPECT_EQ(r.points_checked, 25u);
    EXPECT_TRUE(r.found_negative());
    EXPECT_EQ(r.minimum, Rational(-8));
    EXPECT_EQ(r.argmin, (Point{Rational(0), Rational(-2)}));
  }
}

TEST(GridSearch, RobinsonIsNonnegativeOnGrid) {
  const std::vector<std::int32_t> grid{-3, -2, -1, 0, 1, 2, 3};
  const auto r = grid_search(make_robinson(), grid);
  EXPECT_EQ(r.points_checked, 343u);
  EXPECT_FALSE(r.found_negative());
  EXPECT_EQ(r.minimum, Rational(0));
}

TEST(GridSearch, FallsBackToExactEvaluationWhenUnrepresentable) {
  Polynomial f(2);
  f.add_term(Monomial{1, 0}, Rational(1L << 40));
  f.add_term(Monomial{0, 1}, Rational(-1, 3));
  const std::vector<std::int32_t> grid{-1, 0, 1};
  const auto r = grid_search(f, grid);
  EXPECT_EQ(r.minimum, Rational(-(1L << 40)) - Rational(1, 3));
  EXPECT_EQ(r.argmin, (Point{Rational(-1), Rational(1)}));
}

TEST(GridSearch, KernelsAgreeOnLiftedForm) {
  const Polynomial f = lift(make_L(5), 1) - Rational(1, 7) * lift(make_lax5(), 1);
  const std::vector<std::int32_t> grid{-2, -1, 0, 1, 2};
  const auto a = grid_search(f, grid, GridKernel::Scalar);
  const auto b = grid_search(f, grid, GridKernel::Auto);
  EXPECT_EQ(a.minimum, b.minimum);
  EXPECT_EQ(a.argmin, b.argmin);
}

}  // namespace
}  // namespace symq
