#include "polymaass/special.hpp"

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace polymaass {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,   -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_gamma(cplx s) {
  s -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (s + static_cast<double>(i));
  cplx t = s + kLanczosG + 0.5;
  return std::sqrt(2 * M_PI) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

}  // namespace

cplx gamma_fn(cplx s) {
  double re = s.real();
  if (s.imag() == 0.0 && re <= 0.0 && re == std::round(re))
    throw Error("gamma pole at s = " + std::to_string(re));
  if (s.imag() == 0.0) return boost::math::tgamma(re);
  if (re < 0.5) return M_PI / (std::sin(M_PI * s) * lanczos_gamma(1.0 - s));
  return lanczos_gamma(s);
}

double inc_gamma_upper(double s, double y) {
  if (!(y > 0.0)) throw Error("inc_gamma_upper requires y > 0");
  if (s > 0.0) return boost::math::tgamma(s, y);
  // Walk up to a positive (or zero) parameter, then recur back down:
  // Gamma(s, y) = (Gamma(s+1, y) - y^s e^{-y}) / s.
  int N = static_cast<int>(std::ceil(-s));
  double base = s + N;
  double g = (base == 0.0) ? boost::math::expint(1, y) : boost::math::tgamma(base, y);
  for (int i = N - 1; i >= 0; --i) {
    double a = s + i;
    g = (g - std::pow(y, a) * std::exp(-y)) / a;
  }
  return g;
}

double bessel(BesselKind kind, double order, double x) {
  if (x < 0.0) throw Error("bessel requires x >= 0");
  if (x == 0.0) return order == 0.0 ? 1.0 : 0.0;
  return kind == BesselKind::J ? boost::math::cyl_bessel_j(order, x) : boost::math::cyl_bessel_i(order, x);
}

double zeta_even(int k) {
  if (k < 2 || k % 2) throw Error("zeta_even requires even k >= 2");
  double b = bernoulli(k).get_d();
  double sign = ((k / 2 + 1) % 2) ? -1.0 : 1.0;
  return sign * b * std::pow(2 * M_PI, k) / (2.0 * boost::math::factorial<double>(static_cast<unsigned>(k)));
}

}  // namespace polymaass
