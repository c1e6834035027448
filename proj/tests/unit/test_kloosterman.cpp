#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "polymaass/kloosterman.hpp"
#include "polymaass/modforms.hpp"

using namespace polymaass;

namespace {

long modinv(long d, long c) {
  for (long a = 0; a < c; ++a)
    if ((a * d) % c == 1 % c) return a;
  return -1;
}

std::complex<double> kloosterman_naive(long m, long n, long c) {
  std::complex<double> acc = 0;
  for (long d = 0; d < c; ++d) {
    if (std::gcd(d, c) != 1) continue;
    long a = modinv(d, c);
    double phase = 2 * M_PI * static_cast<double>(((m * a + n * d) % c + c) % c) / static_cast<double>(c);
    acc += std::polar(1.0, phase);
  }
  return acc;
}

}  // namespace

TEST(Kloosterman, SmallValues) {
  for (long m : {-3L, 0L, 5L})
    for (long n : {-2L, 0L, 7L}) EXPECT_EQ(kloosterman_sum(m, n, 1), 1.0);
  EXPECT_NEAR(kloosterman_sum(1, 1, 2), 1.0, 1e-14);
  EXPECT_NEAR(kloosterman_sum(0, 0, 4), 2.0, 1e-14);
  EXPECT_THROW(kloosterman_sum(1, 1, 0), Error);
}

TEST(Kloosterman, MatchesNaiveSum) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> mn(-40, 40), cc(1, 120);
  for (int i = 0; i < 200; ++i) {
    long m = mn(gen), n = mn(gen), c = cc(gen);
    auto want = kloosterman_naive(m, n, c);
    EXPECT_LT(std::abs(want.imag()), 1e-10 * static_cast<double>(c));
    EXPECT_NEAR(kloosterman_sum(m, n, c), want.real(), 1e-9) << m << " " << n << " " << c;
  }
}

TEST(Kloosterman, SymmetryAndPeriodicity) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<long> mn(-500, 500), cc(1, 400);
  for (int i = 0; i < 300; ++i) {
    long m = mn(gen), n = mn(gen), c = cc(gen);
    double k = kloosterman_sum(m, n, c);
    EXPECT_NEAR(k, kloosterman_sum(n, m, c), 1e-9);
    EXPECT_NEAR(k, kloosterman_sum(m + c, n, c), 1e-9);
  }
}

TEST(Kloosterman, RamanujanSum) {
  for (long c = 1; c <= 60; ++c)
    for (long m : {-6L, -1L, 0L, 1L, 12L}) EXPECT_NEAR(static_cast<double>(ramanujan_sum(c, m)), kloosterman_naive(m, 0, c).real(), 1e-9);
}

TEST(Kloosterman, TableAndRowsAgreeWithScalar) {
  auto table = kloosterman_table(-2, -5, 5, 50);
  for (long n = -5; n <= 5; ++n)
    for (long c = 1; c <= 50; ++c)
      EXPECT_NEAR(table[static_cast<size_t>(n + 5)][static_cast<size_t>(c - 1)], kloosterman_sum(-2, n, c), 1e-9);
  auto row = kloosterman_row(3, 4, 80);
  ASSERT_EQ(row->size(), 80u);
  for (long c = 1; c <= 80; ++c) EXPECT_NEAR((*row)[static_cast<size_t>(c - 1)], kloosterman_sum(3, 4, c), 1e-9);
}

TEST(Kloosterman, WeilBoundHoldsOnSample) { EXPECT_TRUE(weil_bound_scan(6, 6, 200).empty()); }

TEST(LSeries, SyntheticZeroProvider) {
  auto zero = [](long, long, long) { return 0.0; };
  EXPECT_EQ(l_series({1, 1, 1.0, 100}, zero).value, 0.0);
  EXPECT_EQ(l_series({-1, 0, 2.0, 100}, zero).value, 0.0);
}

TEST(LSeries, SyntheticConstantProviderGivesZeta) {
  auto one = [](long, long, long) { return 1.0; };
  LSeriesResult r = l_series({-1, 0, 2.0, 200000}, one);
  EXPECT_NEAR(r.value, std::pow(M_PI, 4) / 90, 1e-14 + r.tail_estimate * 2);
  EXPECT_EQ(r.terms, 200000);
}

TEST(LSeries, RamanujanCase) {
  for (long m = 1; m <= 5; ++m) {
    LSeriesResult r = l_series({-m, 0, 1.0, 100000});
    double want = 6 * divisor_sigma(m).get_d() / (static_cast<double>(m) * M_PI * M_PI);
    EXPECT_LT(std::abs(r.value - want), 1e-3) << m;
  }
  EXPECT_NEAR(l_series_zero_closed(-1, 1.0), 6 / (M_PI * M_PI), 1e-15);
}

TEST(LSeries, ZeroCaseMatchesClosedForm) {
  for (long m : {-1L, -4L, 3L, 6L}) {
    LSeriesResult r = l_series({m, 0, 2.0, 20000});
    EXPECT_NEAR(r.value, l_series_zero_closed(m, 2.0), 1e-9) << m;
  }
}

TEST(LSeries, BesselCaseStabilizes) {
  double a = l_series({1, 1, 6.0, 500}).value, b = l_series({1, 1, 6.0, 1000}).value;
  EXPECT_NEAR(a, b, 1e-8 * std::abs(b));
  double c = l_series({-1, 2, 1.5, 4000}).value, d = l_series({-1, 2, 1.5, 8000}).value;
  EXPECT_NEAR(c, d, 1e-4 * std::max(1.0, std::abs(d)));
}

TEST(LSeries, RejectsDivergentRegion) {
  EXPECT_THROW(l_series({1, 0, 1.0, 100}), Error);
  EXPECT_THROW(l_series({1, 0, 0.9, 100000}), Error);
  EXPECT_THROW(l_series({1, 1, 0.7, 100}), Error);
  EXPECT_THROW(l_series({0, 1, 2.0, 100}), Error);
}

TEST(GCoeff, Examples) {
  for (long m : {1L, 2L, 5L})
    for (long n : {1L, 3L}) EXPECT_NEAR(std::abs(g_coeff(2, m, n, 1.0) - 2 * M_PI * std::sqrt(double(m) / n)), 0, 1e-12);
  EXPECT_NEAR(g_coeff(0, 1, 0, 2.0).real(), 8 * std::pow(M_PI, 3), 1e-10);
  EXPECT_THROW(g_coeff(0, 1, 1, 0.0), Error);
  EXPECT_THROW(g_coeff(0, 1, 0, 0.5), Error);
}

TEST(GCoeff, SimpleZeroAtHalfWeight) {
  // Gamma(2s)/Gamma(s - k/2) vanishes at s = k/2 for n < 0.
  for (int k : {2, 4, 12}) {
    EXPECT_EQ(std::abs(g_coeff(k, 1, -1, k / 2.0)), 0.0);
    Jet j = g_coeff_jet(k, 1, -1, k, 2);
    EXPECT_EQ(std::abs(j[0]), 0.0);
    EXPECT_GT(std::abs(j[1]), 0.0);
  }
}

TEST(GCoeff, JetMatchesFiniteDifferences) {
  const double h = 1e-4;
  for (auto [k, m, n] : {std::tuple{0, -1L, 2L}, std::tuple{-10, -1L, -3L}, std::tuple{12, 1L, 0L}, std::tuple{2, 1L, 1L}}) {
    int two_s0 = k <= 0 ? 2 - k : k;
    double s0 = two_s0 / 2.0;
    Jet j = g_coeff_jet(k, m, n, two_s0, 2);
    auto g = [&](double s) { return g_coeff(k, m, n, s); };
    cplx d1 = (g(s0 + h) - g(s0 - h)) / (2 * h);
    cplx d2 = (g(s0 + h) - 2.0 * g(s0) + g(s0 - h)) / (h * h);
    double scale = std::abs(j[0]) + std::abs(j[1]) + std::abs(j[2]);
    EXPECT_LT(std::abs(j[0] - g(s0)), 1e-12 * scale);
    EXPECT_LT(std::abs(j[1] - d1), 1e-6 * scale);
    EXPECT_LT(std::abs(2.0 * j[2] - d2), 1e-4 * scale);
  }
}
