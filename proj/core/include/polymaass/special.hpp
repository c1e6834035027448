#pragma once

#include <vector>

#include "polymaass/point.hpp"

namespace polymaass {

cplx gamma_fn(cplx s);
double inc_gamma_upper(double s, double y);

enum class BesselKind { J, I };
double bessel(BesselKind kind, double order, double x);

double zeta_even(int k);

// Whittaker functions of real parameters at a positive real argument.
struct WhittakerParams {
  double mu = 0.0;
  double nu = 0.0;
  double y = 1.0;
};

// Confluent hypergeometric U(a, b, z) for real a, b and z = r e^{i theta},
// |theta| <= pi, by a rotated-contour integral plus downward recurrence in a.
cplx hyperu(double a, double b, double r, double theta);
double hyperu(double a, double b, double x);

double whittaker_M(const WhittakerParams& p);
cplx whittaker_M(cplx mu, cplx nu, double y);
double whittaker_W(const WhittakerParams& p);
// W_{mu,nu}(r e^{i theta}).
cplx whittaker_W(double mu, double nu, double r, double theta);
// M^+_{mu,nu}(y) = W_{-mu,nu}(y e^{i pi}).
cplx mplus(const WhittakerParams& p);

enum class WhittakerKind { W, Mplus };

// d^j/ds^j (nu = s - 1/2) of W or M^+ at p, by central differences.
cplx whittaker_s_deriv(const WhittakerParams& p, int j, WhittakerKind which, double step);

enum class Sign { Minus, Plus };
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// u^{[j],+-}_{k,n}(y) for j = 0..jmax.
std::vector<cplx> u_derivatives(int k, int n, int jmax, Sign sign, double y, double step);
cplx u_eval(int k, int n, int j, Sign sign, double y, double step = 1e-3);

}  // namespace polymaass
