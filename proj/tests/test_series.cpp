#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "upho/error.hpp"
#include "upho/series.hpp"

using namespace upho;

namespace {

std::vector<long long> to_ll(const IntSeries& s) {
  std::vector<long long> out;
  for (const BigInt& c : s.coefficients()) out.push_back(static_cast<long long>(c));
  return out;
}

IntPolynomial product_of_linear(const std::vector<long long>& lambdas) {
  IntPolynomial p{1};
  for (long long l : lambdas) p = p * IntPolynomial{1, -l};
  return p;
}

}  // namespace

TEST(Series, ReciprocalExamples) {
  EXPECT_EQ(series_reciprocal(IntPolynomial{1, -1}, 5), (IntSeries{1, 1, 1, 1, 1}));
  EXPECT_EQ(series_reciprocal(IntPolynomial{1, -2, -1}, 5), (IntSeries{1, 2, 5, 12, 29}));
  EXPECT_EQ(series_reciprocal(IntPolynomial{1, -3, 1}, 5), (IntSeries{1, 3, 8, 21, 55}));
  EXPECT_THROW(series_reciprocal(IntPolynomial{2, 1}, 3), InvalidArgument);
  EXPECT_EQ(series_divide(IntPolynomial{1, 1}, IntPolynomial{1, -2}, 6),
            (IntSeries{1, 3, 6, 12, 24, 48}));
}

TEST(Series, ReciprocalMatchesRecurrenceOracle) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < 200; ++i) {
    std::vector<long long> h{1};
    for (int d = deg(rng); d > 0; --d) h.push_back(coeff(rng));
    std::vector<BigInt> big(h.begin(), h.end());
    const IntPolynomial hp(big);
    const std::size_t n = 13;
    const IntSeries f = series_reciprocal(hp, n);
    EXPECT_EQ(to_ll(f), oracle::series_quotient({1}, h, n));
    const IntSeries prod = series_mul(IntSeries(hp, n), f);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(prod[k], k == 0 ? 1 : 0);
  }
}

TEST(Series, ExactDivide) {
  EXPECT_EQ(exact_divide(IntPolynomial{1, -3, 2}, IntPolynomial{1, -1}), (IntPolynomial{1, -2}));
  EXPECT_FALSE(exact_divide(IntPolynomial{1, -3, 1}, IntPolynomial{1, -1}).has_value());
}

TEST(LogConcave, Examples) {
  EXPECT_FALSE(is_log_concave(IntSeries{1, 3, 7, 17}));
  EXPECT_TRUE(is_log_concave(IntSeries{1, 4, 15, 55, 200}));
  EXPECT_FALSE(is_log_concave(IntSeries{1, 0, 1}));
  EXPECT_TRUE(is_log_concave(IntSeries{1, 2, 0, 0}));
  EXPECT_FALSE(is_log_concave(IntSeries{1, -1}));
}

TEST(LogConcave, ClosedUnderProduct) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long long> v(1, 6);
  auto random_lc = [&] {
    while (true) {
      std::vector<BigInt> a{1};
      for (int i = 0; i < 4; ++i) a.push_back(v(rng));
      if (is_log_concave(a)) return a;
    }
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = random_lc();
    const auto b = random_lc();
    // Finite polynomials: the full product is determined.
    const IntPolynomial p = IntPolynomial(a) * IntPolynomial(b);
    EXPECT_TRUE(is_log_concave(p.coefficients()));
  }
}

TEST(Toeplitz, Examples) {
  const auto ones = toeplitz_tp_check(IntSeries{1, 1, 1, 1, 1, 1}, 3);
  EXPECT_TRUE(ones.accept);
  EXPECT_EQ(ones.window, 6u);

  const auto r = toeplitz_tp_check(IntSeries{1, 1, 1, 0, 0, 0}, 3);
  ASSERT_FALSE(r.accept);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->rows, (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(r.witness->cols, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(r.witness->determinant, -1);
  EXPECT_EQ(oracle::leibniz_det({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}), -1);

  EXPECT_TRUE(toeplitz_tp_check(IntSeries{1, 0, 0, 0, 0, 0, 0, 0}, 4).accept);
  EXPECT_THROW(toeplitz_tp_check(IntSeries{1, 1, 1}, 3), InvalidArgument);
}

TEST(Toeplitz, WitnessIsLeastNegativeMinorByBruteForce) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> v(-1, 3);
  for (int t = 0; t < 60; ++t) {
    std::vector<long long> s{1};
    for (int i = 1; i < 4; ++i) s.push_back(v(rng));
    std::vector<BigInt> big(s.begin(), s.end());
    const auto report = toeplitz_tp_check(IntSeries(big), 2);
    // Brute force over minors of order <= 2 of the 4x4 window.
    std::optional<std::vector<std::size_t>> first;
    auto entry = [&](std::size_t i, std::size_t j) { return i >= j ? s[i - j] : 0LL; };
    for (std::size_t r1 = 0; r1 < 4 && !first; ++r1) {
      for (std::size_t c1 = 0; c1 < 4 && !first; ++c1) {
        if (entry(r1, c1) < 0) first = std::vector<std::size_t>{r1 + 1, c1 + 1};
      }
    }
    for (std::size_t r1 = 0; r1 < 4 && !first; ++r1) {
      for (std::size_t r2 = r1 + 1; r2 < 4 && !first; ++r2) {
        for (std::size_t c1 = 0; c1 < 4 && !first; ++c1) {
          for (std::size_t c2 = c1 + 1; c2 < 4 && !first; ++c2) {
            const long long d = oracle::leibniz_det(
                {{entry(r1, c1), entry(r1, c2)}, {entry(r2, c1), entry(r2, c2)}});
            if (d < 0) first = std::vector<std::size_t>{r1 + 1, r2 + 1, c1 + 1, c2 + 1};
          }
        }
      }
    }
    EXPECT_EQ(report.accept, !first.has_value());
    if (first && report.witness) {
      std::vector<std::size_t> got = report.witness->rows;
      got.insert(got.end(), report.witness->cols.begin(), report.witness->cols.end());
      EXPECT_EQ(got, *first);
      EXPECT_LT(report.witness->determinant, 0);
    }
  }
}

TEST(Toeplitz, AcceptsTotallyPositiveRatios) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long long> v(1, 3);
  std::uniform_int_distribution<int> n(0, 2);
  for (int t = 0; t < 30; ++t) {
    IntPolynomial g{1}, h{1};
    for (int i = n(rng); i > 0; --i) g = g * IntPolynomial{1, v(rng)};
    for (int i = n(rng) + 1; i > 0; --i) h = h * IntPolynomial{1, -v(rng)};
    const IntSeries s = series_divide(g, h, 6);
    for (std::size_t m = 1; m <= 3; ++m) EXPECT_TRUE(toeplitz_tp_check(s, m).accept);
  }
  EXPECT_TRUE(toeplitz_tp_check(series_divide(IntPolynomial{1, 2, 1}, IntPolynomial{1, -2}, 6), 3)
                  .accept);
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long long> v(-5, 5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 5;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b[i][j] = m[i][j] = v(rng);
    }
    EXPECT_EQ(determinant(b), oracle::leibniz_det(m));
  }
}

TEST(Roots, Examples) {
  EXPECT_EQ(classify_roots(IntPolynomial{1, 2, 1}).verdict, RootVerdict::all_negative);
  EXPECT_EQ(classify_roots(IntPolynomial{1, 2, 1}).negative_count, 2u);
  const auto t2 = classify_roots(IntPolynomial{1, -3, 1});
  EXPECT_EQ(t2.verdict, RootVerdict::type_II);
  EXPECT_EQ(t2.positive_in_unit_count, 1u);
  EXPECT_EQ(t2.greater_than_one_count, 1u);
  EXPECT_EQ(classify_roots(IntPolynomial{1, 1, 1}).verdict, RootVerdict::mixed);
  EXPECT_FALSE(classify_roots(IntPolynomial{1, 1, 1}).all_real);
  EXPECT_EQ(classify_roots(IntPolynomial{1, -5, 5}).verdict, RootVerdict::type_I);
  EXPECT_EQ(classify_roots(IntPolynomial{1, -3, 2}).verdict, RootVerdict::unit_root);
  EXPECT_EQ(classify_roots(IntPolynomial{1}).verdict, RootVerdict::all_negative);
  EXPECT_THROW(classify_roots(IntPolynomial{}), InvalidArgument);
}

TEST(Roots, CountsOnKnownProducts) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long long> v(-4, 4);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<long long> lambdas;
    for (int i = deg(rng); i > 0; --i) {
      long long l = v(rng);
      if (l == 0) l = 2;
      lambdas.push_back(l);
    }
    const auto c = classify_roots(product_of_linear(lambdas));
    EXPECT_TRUE(c.all_real);
    EXPECT_EQ(c.negative_count, std::count_if(lambdas.begin(), lambdas.end(),
                                              [](long long l) { return l < 0; }));
    EXPECT_EQ(c.unit_count, std::count(lambdas.begin(), lambdas.end(), 1));
    EXPECT_EQ(c.greater_than_one_count, std::count_if(lambdas.begin(), lambdas.end(),
                                                      [](long long l) { return l > 1; }));
  }
}

TEST(Roots, AllNegativeImpliesLogConcave) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long long> v(1, 5);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<long long> lambdas;
    for (int i = deg(rng); i > 0; --i) lambdas.push_back(-v(rng));
    const IntPolynomial g = product_of_linear(lambdas);
    ASSERT_EQ(classify_roots(g).verdict, RootVerdict::all_negative);
    EXPECT_TRUE(is_log_concave(g.coefficients()));
  }
}

TEST(Factor, Examples) {
  EXPECT_EQ(factor_over_z(IntPolynomial{1, -3, 2}),
            (std::vector<IntPolynomial>{IntPolynomial{1, -2}, IntPolynomial{1, -1}}));
  EXPECT_EQ(factor_over_z(IntPolynomial{1, -3, 1}),
            (std::vector<IntPolynomial>{IntPolynomial{1, -3, 1}}));
  EXPECT_TRUE(factor_over_z(IntPolynomial{1}).empty());
  EXPECT_THROW(factor_over_z(IntPolynomial{1, 0, 0, 0, 0, 0, 0, 0, 0, 1}), InvalidArgument);
  // (1 - 3x + x^2)(1 - 5x + 5x^2)
  EXPECT_EQ(factor_over_z(IntPolynomial{1, -3, 1} * IntPolynomial{1, -5, 5}),
            (std::vector<IntPolynomial>{IntPolynomial{1, -5, 5}, IntPolynomial{1, -3, 1}}));
}

TEST(Factor, ProductEqualsInput) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long long> v(-3, 3);
  std::uniform_int_distribution<int> parts(1, 3);
  for (int t = 0; t < 60; ++t) {
    IntPolynomial h{1};
    for (int i = parts(rng); i > 0; --i) {
      IntPolynomial f{1, v(rng), v(rng)};
      if (f.degree() < 1) f = IntPolynomial{1, -2};
      h = h * f;
    }
    const auto factors = factor_over_z(h);
    IntPolynomial prod{1};
    for (const auto& f : factors) {
      EXPECT_GE(f.degree(), 1);
      EXPECT_EQ(f[0], 1);
      prod = prod * f;
    }
    EXPECT_EQ(prod, h);
    EXPECT_TRUE(std::is_sorted(factors.begin(), factors.end(),
                               [](const IntPolynomial& a, const IntPolynomial& b) {
                                 return a.degree() < b.degree();
                               }));
  }
}

TEST(Format, IntegerLists) {
  EXPECT_EQ(parse_integer_list("1,-3, 1"), (std::vector<BigInt>{1, -3, 1}));
  EXPECT_EQ(format_integer_list({1, 3, 8}), "1,3,8");
  EXPECT_THROW(parse_integer_list("1,x"), InvalidArgument);
  EXPECT_THROW(parse_integer_list(""), InvalidArgument);
}
