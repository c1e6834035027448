#include <gtest/gtest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>
#include <tuple>

#include "polymaass/special.hpp"
#include "polymaass/suite.hpp"

using namespace polymaass;

namespace {

constexpr double kGamma = 0.5772156649015328606;

double bessel_series(double nu, double x, bool modified, int terms) {
  double acc = 0.0;
  for (int m = 0; m < terms; ++m) {
    double t = std::pow(x / 2, 2 * m + nu) / (std::tgamma(m + 1.0) * std::tgamma(m + nu + 1));
    acc += (modified || m % 2 == 0) ? t : -t;
  }
  return acc;
}

// M_{mu,nu}(y) = e^{-y/2} y^{nu+1/2} 1F1(1/2 + nu - mu; 1 + 2 nu; y), Kummer series in long double.
double whittaker_m_series(double mu, double nu, double y) {
  long double a = 0.5L + nu - mu, b = 1.0L + 2 * nu, term = 1, sum = 1;
  for (int n = 0; n < 400; ++n) {
    term *= (a + n) / (b + n) * y / (n + 1);
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return static_cast<double>(std::exp(-y / 2.0L) * std::pow(static_cast<long double>(y), nu + 0.5L) * sum);
}

// W_{mu,nu}(y) = y^{nu+1/2} e^{-y/2} U(a, b, y) with U from its Laplace integral, valid for a > 0.
double whittaker_w_integral(double mu, double nu, double y) {
  double a = 0.5 + nu - mu, b = 1 + 2 * nu;
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double t) {
    if (!(t > 0) || std::isinf(t)) return 0.0;
    return std::exp(-y * t + (a - 1) * std::log(t) + (b - a - 1) * std::log1p(t));
  };
  double u = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity()) / std::tgamma(a);
  return std::pow(y, nu + 0.5) * std::exp(-y / 2) * u;
}

double e1_series(double y) {
  double acc = -kGamma - std::log(y), term = 1;
  for (int n = 1; n < 80; ++n) {
    term *= -y / n;
    acc -= term / n;
  }
  return acc;
}

}  // namespace

TEST(Gamma, ClassicalValues) {
  EXPECT_NEAR(gamma_fn(1.0).real(), 1.0, 1e-14);
  EXPECT_NEAR(gamma_fn(0.5).real(), std::sqrt(M_PI), 1e-14);
  EXPECT_NEAR(gamma_fn(5.0).real(), 24.0, 1e-12);
}

TEST(Gamma, ReflectionFormula) {
  for (cplx s : {cplx(0.3, 0.7), cplx(-1.2, 2.5), cplx(2.5, -0.4)}) {
    cplx lhs = gamma_fn(s) * gamma_fn(1.0 - s), rhs = M_PI / std::sin(M_PI * s);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::abs(rhs)) << s;
  }
}

TEST(Gamma, RecurrenceInComplexPlane) {
  cplx s(1.3, 4.0);
  EXPECT_LT(std::abs(gamma_fn(s + 1.0) - s * gamma_fn(s)), 1e-12 * std::abs(gamma_fn(s + 1.0)));
}

TEST(IncompleteGamma, Values) {
  for (double y : {0.1, 1.0, 7.5}) EXPECT_NEAR(inc_gamma_upper(1, y), std::exp(-y), 1e-15);
  EXPECT_NEAR(inc_gamma_upper(3, 1e-12), 2.0, 1e-10);
  EXPECT_NEAR(inc_gamma_upper(2, 1), 2 / M_E, 1e-15);
}

TEST(IncompleteGamma, NegativeOrdersFollowRecurrence) {
  for (double y : {0.3, 2.0, 12.566}) {
    double g0 = e1_series(y);
    EXPECT_NEAR(inc_gamma_upper(0, y), g0, 1e-12 * std::max(1.0, g0));
    // Gamma(s+1, y) = s Gamma(s, y) + y^s e^{-y}
    for (double s : {-1.0, -2.0, -5.0, -11.0}) {
      double lhs = inc_gamma_upper(s + 1, y);
      double rhs = s * inc_gamma_upper(s, y) + std::pow(y, s) * std::exp(-y);
      EXPECT_NEAR(lhs, rhs, 1e-11 * std::abs(lhs)) << s << " " << y;
    }
  }
}

TEST(Bessel, JAtOne) {
  EXPECT_NEAR(bessel(BesselKind::J, 1, 1), bessel_series(1, 1, false, 12), 1e-15);
  EXPECT_NEAR(bessel(BesselKind::J, 1, 1), 0.4400505857, 1e-10);
}

TEST(Bessel, SmallArgument) {
  EXPECT_NEAR(bessel(BesselKind::J, 1, 1e-6), 5e-7, 1e-18);
  double x = 1e-2;
  EXPECT_NEAR((bessel(BesselKind::I, 1, x) - bessel(BesselKind::J, 1, x)) / std::pow(x, 3), 0.125, 1e-4);
}

TEST(Bessel, AgreesWithSeries) {
  for (double nu : {0.0, 1.0, 2.5, 11.0})
    for (double x : {0.2, 3.0, 9.0}) {
      double j = bessel_series(nu, x, false, 60), i = bessel_series(nu, x, true, 60);
      EXPECT_NEAR(bessel(BesselKind::J, nu, x), j, 1e-12 * std::max(1.0, std::abs(j)));
      EXPECT_NEAR(bessel(BesselKind::I, nu, x), i, 1e-12 * i);
    }
}

TEST(Zeta, EvenValues) {
  EXPECT_NEAR(zeta_even(2), M_PI * M_PI / 6, 1e-15);
  EXPECT_NEAR(zeta_even(4), std::pow(M_PI, 4) / 90, 1e-15);
  double direct = 0;
  for (int n = 1000000; n >= 1; --n) direct += std::pow(static_cast<double>(n), -12);
  EXPECT_NEAR(zeta_even(12), direct, 1e-10);
}

TEST(Whittaker, ClosedForms) {
  for (double t : {0.5, 2.0, 10.0}) {
    EXPECT_NEAR(whittaker_W({1, 0.5, t}), t * std::exp(-t / 2), 1e-10 * t);
    EXPECT_NEAR(whittaker_W({0, -0.5, t}), std::exp(-t / 2), 1e-10);
    EXPECT_NEAR(std::abs(mplus({0, -0.5, t})) / std::exp(t / 2), 1.0, 1e-10);
  }
}

TEST(Whittaker, MAgreesWithKummerSeries) {
  for (auto [mu, nu, y] : {std::tuple{0.0, 1.0, 2.0}, std::tuple{1.0, 0.3, 2.0}, std::tuple{-1.5, 1.2, 5.0},
                           std::tuple{6.0, 5.5, 0.7}, std::tuple{-3.0, 2.5, 12.0}}) {
    double want = whittaker_m_series(mu, nu, y);
    EXPECT_NEAR(whittaker_M({mu, nu, y}), want, 1e-10 * std::abs(want)) << mu << " " << nu << " " << y;
  }
}

TEST(Whittaker, WAgreesWithLaplaceIntegral) {
  for (auto [mu, nu, y] : {std::tuple{0.0, 0.5, 1.0}, std::tuple{-1.0, 0.75, 3.0}, std::tuple{0.2, 0.3, 0.5},
                           std::tuple{-6.0, 5.5, 4.0}, std::tuple{1.0, 1.5, 20.0}}) {
    double want = whittaker_w_integral(mu, nu, y);
    EXPECT_NEAR(whittaker_W({mu, nu, y}), want, 1e-9 * std::abs(want)) << mu << " " << nu << " " << y;
  }
}

TEST(Whittaker, Asymptotics) {
  EXPECT_NEAR(whittaker_W({1, 0.5, 50}) / (50 * std::exp(-25.0)), 1.0, 0.01);
  double lead = std::tgamma(3.0) / std::tgamma(1.5) * std::exp(25.0);
  EXPECT_NEAR(whittaker_M({0, 1, 50}) / lead, 1.0, 0.02);
}

TEST(Whittaker, OdeAndWronskian) {
  for (auto [mu, nu, y] : {std::tuple{1.0, 0.3, 2.0}, std::tuple{-1.0, 1.5, 4.0}, std::tuple{0.0, 0.75, 1.3}}) {
    double h = 1e-3 * y;
    auto W = [&](double t) { return whittaker_W({mu, nu, t}); };
    auto M = [&](double t) { return whittaker_M({mu, nu, t}); };
    auto d1 = [&](auto f) { return (-f(y + 2 * h) + 8 * f(y + h) - 8 * f(y - h) + f(y - 2 * h)) / (12 * h); };
    auto d2 = [&](auto f) { return (f(y + h) - 2 * f(y) + f(y - h)) / (h * h); };
    double coef = -0.25 + mu / y + (0.25 - nu * nu) / (y * y);
    EXPECT_LT(std::abs(d2(W) + coef * W(y)), 1e-6 * (std::abs(W(y)) + std::abs(d2(W)))) << mu << " " << nu;
    EXPECT_LT(std::abs(d2(M) + coef * M(y)), 1e-6 * (std::abs(M(y)) + std::abs(d2(M)))) << mu << " " << nu;
    double wr = M(y) * d1(W) - d1(M) * W(y);
    double want = -std::tgamma(2 * nu + 1) / std::tgamma(nu - mu + 0.5);
    EXPECT_NEAR(wr, want, 1e-8 * std::abs(want)) << mu << " " << nu;
  }
}

TEST(Whittaker, SuiteChecks) {
  SuiteOptions o;
  for (const auto& rep : run_suite({"whittaker*"}, o)) EXPECT_TRUE(rep.passed) << rep.check_id << " " << rep.residual;
}

TEST(Whittaker, NuDerivativeRichardson) {
  WhittakerParams p{0, 0.5, 2.0};
  cplx a = whittaker_s_deriv(p, 1, WhittakerKind::W, 1e-3);
  cplx b = whittaker_s_deriv(p, 1, WhittakerKind::W, 5e-4);
  EXPECT_LT(std::abs(a - b), 1e-6 * std::max(1.0, std::abs(a)));
  EXPECT_LT(std::abs(whittaker_s_deriv(p, 0, WhittakerKind::W, 1e-3) - whittaker_W(p)), 1e-15);
}

TEST(Whittaker, EvenInNu) {
  for (int j = 0; j <= 3; ++j) {
    cplx plus = whittaker_s_deriv({0.7, 0.4, 3.0}, j, WhittakerKind::W, 1e-3);
    cplx minus = whittaker_s_deriv({0.7, -0.4, 3.0}, j, WhittakerKind::W, 1e-3);
    double sgn = j % 2 ? -1.0 : 1.0;
    EXPECT_LT(std::abs(plus - sgn * minus), 1e-6 * std::max(1e-3, std::abs(plus))) << j;
  }
}

TEST(UFunctions, ClosedForms) {
  EXPECT_NEAR(u_eval(2, 1, 0, Sign::Minus, 1.0).real(), 4 * M_PI * std::exp(-2 * M_PI), 1e-14);
  EXPECT_NEAR(u_eval(0, 0, 2, Sign::Plus, M_E).real(), 1.0, 1e-14);
  EXPECT_NEAR(u_eval(0, -1, 0, Sign::Minus, 1.0).real(), inc_gamma_upper(1, 4 * M_PI) * std::exp(2 * M_PI), 1e-15);
  EXPECT_NEAR(std::abs(u_eval(0, -1, 0, Sign::Plus, 1.0)), std::exp(2 * M_PI), 1e-10 * std::exp(2 * M_PI));
}

TEST(UFunctions, GrowthAndDecay) {
  const double y = 20, h = 1e-3;
  for (int k : {0, 2, 12})
    for (int n : {-1, 1})
      for (int j : {0, 1}) {
        auto logd = [&](Sign s) {
          double a = std::abs(u_eval(k, n, j, s, y + h)), b = std::abs(u_eval(k, n, j, s, y - h));
          return (std::log(a) - std::log(b)) / (2 * h);
        };
        EXPECT_LT(logd(Sign::Minus), 0) << k << " " << n << " " << j;
        EXPECT_GT(logd(Sign::Plus), 0) << k << " " << n << " " << j;
      }
}
