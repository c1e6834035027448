#pragma once

#include <string>

#include "polymaass/point.hpp"
#include "polymaass/qseries.hpp"

namespace polymaass {

// k = 12 ell + k_prime with k_prime in {0, 4, 6, 8, 10, 14}.
struct WeightProfile {
  int k = 0;
  int ell = 0;
  int k_prime = 0;
};

WeightProfile ell_index(int k);

mpz_class divisor_sigma(long n, unsigned power = 1);

QSeries delta_qexp(int N);
QSeries eisenstein_qexp(int k, int N);
QSeries e2star_qpart(int N);
QSeries j_qexp(int N);
QSeries faber_poly(int m, int N);

// f_{k,m} = q^{-m} + sum_{n > ell_k} a_k(m,n) q^n.
struct BasisElement {
  int k = 0;
  int m = 0;
  QSeries expansion;

  Rational a(int n) const { return expansion.coeff(n); }
};

BasisElement duke_jenkins(int k, int m, int N);

enum class ClosedForm { F01, G21, Gk0, F0_neg_m_0, F0_neg1_0 };

ClosedForm closed_form_from_name(const std::string& name);
const char* closed_form_name(ClosedForm f);

// `param` is k for Gk0 and m for F0_neg_m_0; ignored otherwise.
cplx closed_form_eval(ClosedForm form, int param, EvalPoint z, int N);

// log|eta(z)| from the product expansion truncated at q^N.
double log_abs_eta(EvalPoint z, int N);

inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

}  // namespace polymaass
