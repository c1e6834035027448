#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "polymaass/modforms.hpp"
#include "polymaass/serialize.hpp"

using namespace polymaass;

namespace {

// Coefficients of q prod (1 - q^n)^24 through q^N, by repeated multiplication in mpz.
std::vector<mpz_class> tau_oracle(int N) {
  std::vector<mpz_class> p(static_cast<size_t>(N + 1));
  p[0] = 1;
  for (int n = 1; n <= N; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = N; i >= n; --i) p[static_cast<size_t>(i)] -= p[static_cast<size_t>(i - n)];
  std::vector<mpz_class> tau(static_cast<size_t>(N + 1));
  for (int i = 1; i <= N; ++i) tau[static_cast<size_t>(i)] = p[static_cast<size_t>(i - 1)];
  return tau;
}

long sigma_oracle(long n, int power) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += static_cast<long>(std::llround(std::pow(d, power)));
  return s;
}

cplx eisenstein_numeric(int k, EvalPoint z, double factor, int N) {
  cplx q = z.q(), acc = 1.0, qn = 1.0;
  for (int n = 1; n <= N; ++n) {
    qn *= q;
    acc += factor * static_cast<double>(sigma_oracle(n, k - 1)) * qn;
  }
  return acc;
}

cplx delta_numeric(EvalPoint z, int N) {
  cplx q = z.q(), prod = 1.0, qn = 1.0;
  for (int n = 1; n <= N; ++n) {
    qn *= q;
    prod *= std::pow(1.0 - qn, 24);
  }
  return q * prod;
}

cplx j_numeric(EvalPoint z) {
  cplx e4 = eisenstein_numeric(4, z, 240, 60);
  return e4 * e4 * e4 / delta_numeric(z, 60);
}

}  // namespace

TEST(DivisorSigma, SmallValues) {
  EXPECT_EQ(divisor_sigma(1), 1);
  EXPECT_EQ(divisor_sigma(4), 7);
  EXPECT_EQ(divisor_sigma(6), 12);
  for (long n = 1; n <= 40; ++n) {
    EXPECT_EQ(divisor_sigma(n, 3), sigma_oracle(n, 3)) << n;
    EXPECT_EQ(divisor_sigma(n, 0), sigma_oracle(n, 0)) << n;
  }
}

TEST(Delta, LeadingCoefficients) {
  QSeries d = delta_qexp(5);
  EXPECT_EQ(d.coeff(0), 0);
  EXPECT_EQ(d.coeff(1), 1);
  EXPECT_EQ(d.coeff(2), -24);
}

TEST(Delta, MatchesProductOracle) {
  const int N = 30;
  auto tau = tau_oracle(N);
  QSeries d = delta_qexp(N);
  for (int n = 1; n <= N; ++n) EXPECT_EQ(d.coeff(n), tau[static_cast<size_t>(n)]) << n;
}

TEST(Delta, TauIsMultiplicative) {
  QSeries d = delta_qexp(40);
  EXPECT_EQ(d.coeff(6), d.coeff(2) * d.coeff(3));
  EXPECT_EQ(d.coeff(35), d.coeff(5) * d.coeff(7));
  // tau(p^2) = tau(p)^2 - p^11
  EXPECT_EQ(d.coeff(4), d.coeff(2) * d.coeff(2) - 2048);
}

TEST(Eisenstein, Coefficients) {
  QSeries e4 = eisenstein_qexp(4, 12), e6 = eisenstein_qexp(6, 12);
  EXPECT_EQ(e4.coeff(0), 1);
  EXPECT_EQ(e4.coeff(1), 240);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(e4.coeff(n), 240 * sigma_oracle(n, 3)) << n;
    EXPECT_EQ(e6.coeff(n), -504 * sigma_oracle(n, 5)) << n;
  }
  EXPECT_THROW(eisenstein_qexp(2, 4), Error);
}

TEST(Eisenstein, WeightEightIsSquareOfWeightFour) {
  QSeries e4 = eisenstein_qexp(4, 15);
  EXPECT_EQ(eisenstein_qexp(8, 15), e4 * e4);
}

TEST(Eisenstein, E2StarQPart) {
  QSeries s = e2star_qpart(8);
  EXPECT_EQ(s.coeff(1), 1);
  EXPECT_EQ(s.coeff(4), 7);
  EXPECT_EQ(s.coeff(6), 12);
}

TEST(JInvariant, Expansion) {
  QSeries j = j_qexp(3);
  EXPECT_EQ(j.coeff(-1), 1);
  EXPECT_EQ(j.coeff(0), 744);
  EXPECT_EQ(j.coeff(1), 196884);
  EXPECT_EQ(j.coeff(2), 21493760);
  EXPECT_EQ(j.coeff(3), 864299970);
}

TEST(JInvariant, CubeOfE4IsJTimesDelta) {
  QSeries e4 = eisenstein_qexp(4, 10);
  EXPECT_EQ((j_qexp(12) * delta_qexp(12)).truncated(10), e4 * e4 * e4);
}

TEST(Faber, Polynomials) {
  EXPECT_EQ(faber_poly(0, 5), QSeries::one(5));
  EXPECT_EQ(faber_poly(-1, 3).coeff(1), 196884);
  EXPECT_EQ(faber_poly(-1, 3).coeff(0), 0);
  QSeries j2 = faber_poly(-2, 3);
  EXPECT_EQ(j2.coeff(-2), 1);
  EXPECT_EQ(j2.coeff(-1), 0);
  EXPECT_EQ(j2.coeff(0), 0);
  EXPECT_EQ(j2.coeff(1), 42987520);
  EXPECT_THROW(faber_poly(1, 3), Error);
}

TEST(EllIndex, Decomposition) {
  auto check = [](int k, int ell, int kp) {
    WeightProfile w = ell_index(k);
    EXPECT_EQ(w.ell, ell) << k;
    EXPECT_EQ(w.k_prime, kp) << k;
    EXPECT_EQ(12 * w.ell + w.k_prime, k);
  };
  check(0, 0, 0);
  check(2, -1, 14);
  check(-10, -2, 14);
  check(4, 0, 4);
  check(12, 1, 0);
  check(14, 0, 14);
  check(26, 1, 14);
}

TEST(DukeJenkins, GoldenCoefficients) {
  EXPECT_EQ(duke_jenkins(0, 0, 5).expansion, QSeries::one(5));
  EXPECT_EQ(duke_jenkins(0, 1, 2).a(1), 196884);
  EXPECT_EQ(duke_jenkins(0, 1, 2).a(2), 21493760);
  EXPECT_EQ(duke_jenkins(0, 2, 2).a(1), 42987520);
  EXPECT_EQ(duke_jenkins(0, 2, 2).a(2), mpz_class("40491909396"));
}

TEST(DukeJenkins, PrincipalPartAndGap) {
  for (int k : {-10, -4, 0, 2, 4, 12, 14}) {
    WeightProfile w = ell_index(k);
    for (int m = -w.ell; m <= -w.ell + 3; ++m) {
      BasisElement b = duke_jenkins(k, m, 6);
      EXPECT_EQ(b.a(-m), 1) << k << "," << m;
      for (int n = -m + 1; n <= w.ell; ++n) EXPECT_EQ(b.a(n), 0) << k << "," << m << "," << n;
    }
  }
  EXPECT_THROW(duke_jenkins(12, -2, 4), Error);
}

TEST(DukeJenkins, WeightTwelveLeadingElementIsDelta) {
  EXPECT_EQ(duke_jenkins(12, -1, 10).expansion, delta_qexp(10));
}

TEST(DukeJenkins, Duality) {
  EXPECT_EQ(duke_jenkins(0, 1, 2).a(2), -duke_jenkins(2, 2, 1).a(1));
  for (int k : {-10, 0, 2, 4, 12}) {
    int ell = ell_index(k).ell, ell2 = ell_index(2 - k).ell;
    for (int m = std::max(1, -ell); m <= 6; ++m)
      for (int n = std::max(1, -ell2); n <= 6; ++n) {
        if (n <= ell) continue;
        EXPECT_EQ(duke_jenkins(k, m, n).a(n), -duke_jenkins(2 - k, n, m).a(m)) << k << " " << m << " " << n;
      }
  }
}

TEST(DukeJenkins, BasisJson) {
  std::string js = basis_to_json(duke_jenkins(0, 1, 2));
  EXPECT_NE(js.find("\"196884\""), std::string::npos);
  EXPECT_NE(js.find("\"m\":1"), std::string::npos);
}

TEST(ClosedForms, F0Neg1IsJMinus720) {
  for (EvalPoint z : {EvalPoint(0.1, 1.1), EvalPoint(-0.3, 0.9), EvalPoint(0, 2)}) {
    cplx want = j_numeric(z) - 720.0;
    EXPECT_LT(std::abs(closed_form_eval(ClosedForm::F0_neg1_0, 0, z, 40) - want), 1e-9 * std::abs(want));
  }
}

TEST(ClosedForms, G21AtI) {
  double tail = 0;
  for (int n = 1; n <= 30; ++n) tail += static_cast<double>(sigma_oracle(n, 1)) * std::exp(-2 * M_PI * n);
  double want = M_PI / 3 - 1 - 8 * M_PI * tail;
  EXPECT_NEAR(closed_form_eval(ClosedForm::G21, 0, EvalPoint(0, 1), 30).real(), want, 1e-13);
}

TEST(ClosedForms, F0NegMDiffersFromBasisBySigma) {
  EvalPoint z(0.2, 1.05);
  for (int m = 1; m <= 3; ++m) {
    cplx f = duke_jenkins(0, m, 40).expansion.evaluate(z.q());
    cplx F = closed_form_eval(ClosedForm::F0_neg_m_0, m, z, 40);
    EXPECT_LT(std::abs(F - f - 24.0 * static_cast<double>(sigma_oracle(m, 1))), 1e-8 * std::abs(f)) << m;
  }
}

TEST(ClosedForms, Modularity) {
  EvalPoint z(0.17, 0.93);
  EvalPoint w(-z.z().real() / std::norm(z.z()), z.y / std::norm(z.z()));  // -1/z
  for (ClosedForm f : {ClosedForm::F01, ClosedForm::F0_neg1_0}) {
    cplx a = closed_form_eval(f, 0, z, 60), b = closed_form_eval(f, 0, w, 60);
    EXPECT_LT(std::abs(a - b), 1e-9 * (1 + std::abs(a))) << closed_form_name(f);
  }
  for (int k : {4, 6, 12}) {
    cplx a = closed_form_eval(ClosedForm::Gk0, k, z, 80), b = closed_form_eval(ClosedForm::Gk0, k, w, 80);
    EXPECT_LT(std::abs(b - std::pow(z.z(), k) * a), 1e-9 * (1 + std::abs(b))) << k;
  }
}

TEST(ClosedForms, Names) {
  for (ClosedForm f : {ClosedForm::F01, ClosedForm::G21, ClosedForm::Gk0, ClosedForm::F0_neg_m_0, ClosedForm::F0_neg1_0})
    EXPECT_EQ(closed_form_from_name(closed_form_name(f)), f);
  EXPECT_THROW(closed_form_from_name("nope"), Error);
}

TEST(EvalPoint, RejectsLowerHalfPlane) {
  EXPECT_THROW(EvalPoint(0, 0), Error);
  EXPECT_THROW(EvalPoint(0, -1), Error);
}
