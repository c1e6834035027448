#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "polymaass/operators.hpp"
#include "polymaass/poincare.hpp"

using namespace polymaass;

namespace {

// M_{kappa,mu}(t) from the integral over [-1, 1] (requires mu + 1/2 > |kappa|).
double whittaker_m_quadrature(double kappa, double mu, double t) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double u) { return std::exp(t * u / 2) * std::pow(1 + u, mu - kappa - 0.5) * std::pow(1 - u, mu + kappa - 0.5); };
  double I = integrator.integrate(f, -1.0, 1.0);
  double pref = std::tgamma(1 + 2 * mu) / (std::tgamma(0.5 + mu - kappa) * std::tgamma(0.5 + mu + kappa));
  return pref * std::pow(t, mu + 0.5) * std::pow(2.0, -2 * mu) * I;
}

EvalPoint inv(EvalPoint z) {
  cplx w = -1.0 / z.z();
  return EvalPoint(w);
}

TruncationPolicy small_policy() {
  TruncationPolicy p;
  p.c_max = 2000;
  p.n_max = 12;
  return p;
}

}  // namespace

TEST(Phi, MatchesQuadrature) {
  cplx v = phi_eval(0, 1, EvalPoint(0, 1), 2.0);
  double want = whittaker_m_quadrature(0, 1.5, 4 * M_PI);
  EXPECT_LT(std::abs(v - want), 1e-10 * want);
}

TEST(Phi, TranslationOnlyShiftsPhase) {
  EvalPoint z(0.23, 0.7), z1(1.23, 0.7), zh(0.73, 0.7);
  for (long m : {-2L, 1L, 3L}) {
    cplx a = phi_eval(4, m, z, 1.6), b = phi_eval(4, m, z1, 1.6), c = phi_eval(4, m, zh, 1.6);
    EXPECT_LT(std::abs(a - b), 1e-12 * std::abs(a));
    EXPECT_NEAR(std::abs(c), std::abs(a), 1e-12 * std::abs(a));
    EXPECT_LT(std::abs(c - a * std::polar(1.0, M_PI * m)), 1e-9 * std::abs(a));
  }
}

TEST(Phi, XiMapsToDualWeight) {
  for (auto [k, m, s] : {std::tuple{0, 1L, 2.0}, std::tuple{4, -1L, 1.6}, std::tuple{-2, 2L, 2.5}}) {
    EvalPoint z(0.1, 0.9);
    SampledForm f{k, [=](EvalPoint w) { return phi_eval(k, m, w, s); }};
    cplx lhs = xi_numeric(f, z, 1e-3 * z.y);
    cplx rhs = std::pow(4 * M_PI, 1 - k) * (s - k / 2.0) * phi_eval(2 - k, -m, z, s);
    EXPECT_LT(std::abs(lhs - rhs), 1e-7 * std::abs(rhs)) << k << " " << m;
  }
}

TEST(PoincareDirect, IdentityCosetAlone) {
  PoincareSpec spec{4, 1, 0, 1.6};
  EvalPoint z(0.1, 1.2);
  DirectSum d = poincare_direct_sum(spec, z, 1.0);
  EXPECT_EQ(d.cosets, 1);
  EXPECT_EQ(d.value, phi_eval(4, 1, z, 1.6));
  EXPECT_THROW(poincare_direct_sum({4, 1, 0, 0.9}, z, 10), Error);
}

TEST(PoincareFourier, AgreesWithDirectSum) {
  PoincareSpec spec{4, 1, 0, 2.5};
  EvalPoint z(0.15, 1.1);
  cplx direct = poincare_direct_sum(spec, z, 150).value;
  cplx fourier = poincare_fourier(spec, z, small_policy());
  EXPECT_LT(std::abs(direct - fourier), 1e-4 * std::abs(fourier));
}

TEST(PoincareFourier, Modularity) {
  PoincareSpec spec{4, 1, 0, 2.5};
  EvalPoint z(0.2, 0.85);
  cplx a = poincare_fourier(spec, z, small_policy()), b = poincare_fourier(spec, inv(z), small_policy());
  EXPECT_LT(std::abs(b - std::pow(z.z(), 4) * a), 1e-5 * (1 + std::abs(b)));
}

TEST(PoincareFourier, EigenEquation) {
  PoincareSpec spec{0, -1, 0, 2.0};
  EvalPoint z(0.1, 1.05);
  SampledForm f{0, [&](EvalPoint w) { return poincare_fourier(spec, w, small_policy()); }};
  cplx lap = laplacian_numeric(f, z, 1e-3 * z.y);
  cplx want = (2.0 - 0.0) * (1.0 - 0.0 - 2.0) * f.evaluator(z);
  EXPECT_LT(std::abs(lap - want), 1e-4 * std::abs(want));
}

TEST(PoincareFourier, TermDiagnostics) {
  FourierTerm t = poincare_fourier_term({12, 1, 0, 6.0}, 2, 1.0, small_policy());
  EXPECT_GE(t.size, std::abs(t.value) * 0.999);
  EXPECT_GE(t.tail_estimate, 0.0);
}

TEST(Eisenstein, EigenValue) {
  TruncationPolicy p;
  EvalPoint z(0.3, 1.0);
  SampledForm f{0, [&](EvalPoint w) { return eisenstein_lattice(0, w, 2.0, p); }};
  cplx lap = laplacian_numeric(f, z, 1e-2 * z.y);
  EXPECT_LT(std::abs(lap - (-2.0) * f.evaluator(z)), 1e-4 * std::abs(f.evaluator(z)));
}

TEST(Eisenstein, WeightZeroInvariance) {
  TruncationPolicy p;
  EvalPoint z(0.3, 1.0);
  cplx a = eisenstein_lattice(0, z, 2.0, p), b = eisenstein_lattice(0, inv(z), 2.0, p);
  EXPECT_LT(std::abs(a - b), 1e-5 * std::abs(a));
}

TEST(Eisenstein, AgreesWithLargerBound) {
  TruncationPolicy p;
  EvalPoint z(0, 1);
  // Independent brute force: 2 y^s sum over m >= 0 (n > 0 when m = 0) of |m z + n|^{-2s}.
  double acc = 0;
  const long B = 2000;
  for (long m = 0; m <= B; ++m)
    for (long n = -B; n <= B; ++n) {
      if (m == 0 && n <= 0) continue;
      double r2 = double(m) * double(m) + double(n) * double(n);
      acc += 1.0 / (r2 * r2);
    }
  EXPECT_LT(std::abs(eisenstein_lattice(0, z, 2.0, p) - 2 * acc), 1e-5 * 2 * acc);
  EXPECT_THROW(eisenstein_lattice(0, z, 0.9, p), Error);
}

TEST(Eisenstein, CompletedPrefactor) {
  TruncationPolicy p;
  p.c_max = 2000;
  EvalPoint z(0.1, 1.3);
  cplx want = 4.0 * 3.0 * std::pow(M_PI, -4) * 120.0 * eisenstein_lattice(4, z, 2.0, p);
  EXPECT_LT(std::abs(complete_eisenstein(4, z, 2.0, p) - want), 1e-12 * std::abs(want));
}
