#include "polymaass/jet.hpp"

#include <cmath>

#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/polygamma.hpp>

namespace polymaass {

Jet::Jet(int order, cplx constant) : c_(static_cast<size_t>(order + 1), 0.0) { c_[0] = constant; }

Jet Jet::linear(int order, cplx c0, cplx c1) {
  Jet j(order, c0);
  if (order >= 1) j[1] = c1;
  return j;
}

Jet& Jet::operator+=(const Jet& o) {
  for (int i = 0; i <= order() && i <= o.order(); ++i) c_[static_cast<size_t>(i)] += o[i];
  return *this;
}

Jet& Jet::operator*=(cplx a) {
  for (auto& c : c_) c *= a;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  int n = std::min(a.order(), b.order());
  Jet r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

Jet Jet::reciprocal() const {
  if (c_[0] == 0.0) throw Error("jet reciprocal of a series with zero constant term");
  Jet r(order());
  r[0] = 1.0 / c_[0];
  for (int n = 1; n <= order(); ++n) {
    cplx acc = 0;
    for (int i = 1; i <= n; ++i) acc += (*this)[i] * r[n - i];
    r[n] = -acc * r[0];
  }
  return r;
}

Jet jet_exp(const Jet& g) {
  Jet f(g.order(), std::exp(g[0]));
  for (int k = 1; k <= g.order(); ++k) {
    cplx acc = 0;
    for (int i = 1; i <= k; ++i) acc += static_cast<double>(i) * g[i] * f[k - i];
    f[k] = acc / static_cast<double>(k);
  }
  return f;
}

namespace {

// log Gamma(x0 + slope*eps) for integer x0 >= 1, via polygamma values.
Jet jet_log_gamma_positive(int x0, double slope, int order) {
  Jet g(order, std::lgamma(static_cast<double>(x0)));
  double sp = 1.0;
  for (int k = 1; k <= order; ++k) {
    sp *= slope;
    double pk = boost::math::polygamma(k - 1, static_cast<double>(x0));
    g[k] = pk * sp / boost::math::factorial<double>(static_cast<unsigned>(k));
  }
  return g;
}

// sin(pi*slope*eps) / pi
Jet jet_sin_pi_over_pi(double slope, int order) {
  Jet s(order);
  double t = M_PI * slope;
  double term = t;
  for (int k = 1; k <= order; k += 2) {
    s[k] = term / M_PI;
    term *= -t * t / ((k + 1.0) * (k + 2.0));
  }
  return s;
}

}  // namespace

Jet jet_gamma(int x0, double slope, int order) {
  if (x0 <= 0) throw Error("gamma pole at " + std::to_string(x0));
  return jet_exp(jet_log_gamma_positive(x0, slope, order));
}

Jet jet_rgamma(int x0, double slope, int order) {
  if (x0 >= 1) {
    Jet g = jet_log_gamma_positive(x0, slope, order);
    g *= -1.0;
    return jet_exp(g);
  }
  // 1/Gamma(-N + d) = (-1)^N Gamma(1 + N - d) sin(pi d) / pi
  int N = -x0;
  Jet g = jet_gamma(1 + N, -slope, order);
  Jet r = g * jet_sin_pi_over_pi(slope, order);
  if (N % 2) r *= -1.0;
  return r;
}

}  // namespace polymaass
