#include <gtest/gtest.h>

#include "mockeis/bernoulli.hpp"
#include "mockeis/mock_eisenstein.hpp"
#include "mockeis/partition.hpp"
#include "mockeis/qfunctions.hpp"
#include "mockeis/suites.hpp"

using namespace mockeis;

namespace {

QSeries from(std::initializer_list<long> cs) {
  QSeries s(static_cast<int>(cs.size()) - 1);
  int n = 0;
  for (long c : cs) s[n++] = c;
  return s;
}

// Akiyama-Tanigawa gives B_n with B_1 = +1/2.
std::vector<Rational> akiyama_tanigawa(int count) {
  std::vector<Rational> out, a(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    a[static_cast<std::size_t>(m)] = make_rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[static_cast<std::size_t>(j - 1)] =
          j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    out.push_back(a[0]);
  }
  return out;
}

Integer sigma(int e, int n) {
  Integer s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += ipow(d, static_cast<unsigned>(e));
  return s;
}

// g_{a,b,l} by scanning every (m, n) box cell against both lattice conditions.
QSeries g_by_scan(int a, int b, int ell, int order) {
  QSeries g(order);
  g[0] = (1 - pow2(ell - 1)) * bernoulli(ell) / (2 * ell);
  for (int m = 1; m <= order; ++m)
    for (int n = 1; m * n <= order; ++n) {
      if (a * n - 1 >= b * m && b * m >= b) g[m * n] += ipow(a * n - b * m, static_cast<unsigned>(ell - 1));
      if (m - 1 >= a * b * n && a * b * n >= a * b)
        g[m * n] -= ipow(m - a * b * n, static_cast<unsigned>(ell - 1));
    }
  return g;
}

}  // namespace

TEST(Bernoulli, Values) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
  EXPECT_EQ(bernoulli(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli(4), make_rational(-1, 30));
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
  const auto at = akiyama_tanigawa(60);
  for (int j = 2; j < 60; ++j) EXPECT_EQ(bernoulli(j), at[static_cast<std::size_t>(j)]) << j;
  for (int j = 3; j < 60; j += 2) EXPECT_EQ(bernoulli(j), 0);
}

TEST(Bernoulli, Polynomials) {
  EXPECT_EQ(bernoulli_poly(1, make_rational(1, 2)), 0);
  for (int j = 0; j <= 20; ++j) {
    EXPECT_EQ(bernoulli_poly(j, make_rational(1, 2)), -(1 - pow2(1 - j)) * bernoulli(j)) << j;
    EXPECT_EQ(bernoulli_poly(0, make_rational(j, 7)), 1);
  }
  // B_n(x + 1) - B_n(x) = n x^{n-1}
  const Rational x = make_rational(3, 5);
  for (int n = 1; n <= 15; ++n)
    EXPECT_EQ(bernoulli_poly(n, x + 1) - bernoulli_poly(n, x), n * pow(x, static_cast<unsigned>(n - 1)));
}

TEST(Eisenstein, Examples) {
  QSeries g2 = from({0, 1, 3, 4, 7});
  g2[0] = make_rational(-1, 24);
  EXPECT_EQ(eisenstein(2, 4), g2);
  EXPECT_EQ(eisenstein(4, 10)[0], make_rational(1, 240));
  EXPECT_TRUE(eisenstein(3, 10).is_zero());
  EXPECT_THROW(eisenstein(0, 10), InvalidArgument);
  for (int j : {2, 4, 6, 8, 10}) {
    const QSeries g = eisenstein(j, 30);
    EXPECT_EQ(g[0], -bernoulli(j) / (2 * j));
    for (int n = 1; n <= 30; ++n) EXPECT_EQ(g[n], Rational(sigma(j - 1, n)));
  }
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(1, 5, 12), from({1, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 1, 0}));
  EXPECT_EQ(theta(3, 5, 13), from({1, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(theta(1, 2, 5), FractionalExponent);
  EXPECT_THROW(theta(7, 1, 5), FractionalExponent);
}

TEST(Theta, DerivativesAreTwiceD) {
  for (auto [a, b] : {std::pair{1, 5}, {3, 5}, {1, 7}, {5, 7}}) {
    QSeries want = theta(a, b, 40);
    for (int m = 0; m <= 4; ++m) {
      EXPECT_EQ(theta_deriv(a, b, m, 40), want) << a << "," << b << " m=" << m;
      want = q_derivative(want) * Rational(2);
    }
  }
}

TEST(DivisorLikeG, Examples) {
  QSeries want = from({0, 0, 0, 1, 3, 5, 7, 9, 11});
  want[0] = make_rational(-1, 24);
  EXPECT_EQ(divisor_like_g(2, 5, 2, 8), want);
  EXPECT_TRUE(divisor_like_g(2, 5, 3, 8).is_zero());
  EXPECT_EQ(divisor_like_g(2, 5, 0, 8), QSeries::constant(1, 8));
}

TEST(DivisorLikeG, MatchesBoxScan) {
  for (int a : {1, 2, 3})
    for (int b : {1, 3, 5, 7})
      for (int ell : {2, 4, 6}) EXPECT_EQ(divisor_like_g(a, b, ell, 40), g_by_scan(a, b, ell, 40));
}

TEST(KRankSeries, Examples) {
  EXPECT_EQ(kRank_count_series(3, 0, 10)[2], 1);
  for (int m = -4; m <= 4; ++m) EXPECT_EQ(kRank_count_series(3, m, 10)[0], 0);
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(kRank_count_series(3, m, 25), kRank_count_series(3, -m, 25));
}

TEST(KRankSeries, MatchesEnumeration) {
  for (int k = 3; k <= 5; ++k) {
    const CountTable t = count_table(k, 6, 25);
    for (int m = -6; m <= 6; ++m) {
      const QSeries s = kRank_count_series(k, m, 25);
      for (int n = 0; n <= 25; ++n) EXPECT_EQ(s[n], Rational(t.at(m, n))) << k << " " << m << " " << n;
    }
  }
}

TEST(RankMoment, Examples) {
  for (auto method : {MomentMethod::direct, MomentMethod::divisor_sum, MomentMethod::combinatorial})
    EXPECT_EQ(rank_moment(3, 2, 4, method).series, from({0, 0, 0, 2, 8})) << to_string(method);
  for (int j : {1, 3, 5})
    for (auto method : {MomentMethod::direct, MomentMethod::divisor_sum, MomentMethod::combinatorial})
      EXPECT_TRUE(rank_moment(4, j, 20, method).series.is_zero());
  const QSeries r0 = rank_moment(3, 0, 10, MomentMethod::direct).series;
  EXPECT_EQ(r0[2], 1);
  EXPECT_EQ(r0[3], 2);
  EXPECT_THROW(rank_moment(2, 2, 10, MomentMethod::direct), InvalidArgument);
  EXPECT_THROW(rank_moment(3, 2, 10, MomentMethod::eisenstein), InvalidArgument);
}

TEST(RankMoment, DirectEqualsDivisorSum) {
  for (int k = 3; k <= 5; ++k)
    for (int j = 0; j <= 10; j += 2)
      EXPECT_EQ(rank_moment(k, j, 40, MomentMethod::direct).series,
                rank_moment(k, j, 40, MomentMethod::divisor_sum).series)
          << k << " " << j;
}

TEST(RankMoment, ZerothMomentFromTheta) {
  for (int k = 3; k <= 5; ++k)
    EXPECT_EQ(rank_moment(k, 0, 40, MomentMethod::direct).series,
              (QSeries::constant(1, 40) - theta(1, 2 * k - 1, 40)) * inverse(euler_product(40)));
}

TEST(RankMoment, CombinatorialMatchesSeries) {
  for (int k = 3; k <= 5; ++k)
    for (int j = 0; j <= 6; ++j)
      EXPECT_EQ(rank_moment(k, j, 25, MomentMethod::combinatorial).series,
                rank_moment(k, j, 25, MomentMethod::direct).series)
          << k << " " << j;
}

TEST(RankMoment, GeneratingFunctionThroughW10) {
  for (int k = 3; k <= 5; ++k) {
    const ResidualReport rep(suites::moment_generating_residual(k, 10, 30));
    EXPECT_TRUE(rep.pass) << rep.describe();
  }
}

TEST(CrankMoment, Examples) {
  EXPECT_EQ(crank_moment(0, 3, MomentMethod::combinatorial).series, from({1, 1, 2, 3}));
  EXPECT_EQ(crank_moment(0, 3, MomentMethod::eisenstein).series, from({1, 1, 2, 3}));
  EXPECT_TRUE(crank_moment(1, 20, MomentMethod::combinatorial).series.is_zero());
  EXPECT_THROW(crank_moment(2, 10, MomentMethod::direct), InvalidArgument);
}

TEST(CrankMoment, MethodsAgree) {
  for (int j = 0; j <= 8; ++j)
    EXPECT_EQ(crank_moment(j, 20, MomentMethod::combinatorial).series,
              crank_moment(j, 20, MomentMethod::eisenstein).series)
        << j;
}

TEST(Multisum, Examples) {
  const CountTable t = fgk_multisum(3, 4, 10);
  EXPECT_EQ(t.at(0, 2), 1);
  for (int m = -4; m <= 4; ++m) EXPECT_EQ(t.at(m, 0), 0);
  EXPECT_THROW(fgk_multisum(2, 4, 10), InvalidArgument);
}

TEST(Multisum, ThreeWayOracle) {
  for (int k = 3; k <= 4; ++k) {
    const int maxn = k == 3 ? 15 : 20;
    const CountTable ms = fgk_multisum(k, 5, maxn);
    EXPECT_EQ(ms, count_table(k, 5, maxn)) << k;
    for (int m = -5; m <= 5; ++m) {
      const QSeries s = kRank_count_series(k, m, maxn);
      for (int n = 0; n <= maxn; ++n) EXPECT_EQ(s[n], Rational(ms.at(m, n)));
    }
  }
}
