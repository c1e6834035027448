#include <cmath>
#include <type_traits>

#include <boost/math/special_functions/gamma.hpp>

#include "polymaass/finite_difference.hpp"
#include "polymaass/special.hpp"

namespace polymaass {

namespace {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

// Exp-sinh rule for int_0^inf f(u) du; f returns the log of the integrand
// (real or complex) so that extreme magnitudes never overflow.
template <typename T, typename LogF>
T exp_sinh(LogF logf, double rel_tol = 1e-15) {
  auto node = [&](double t) -> T {
    double u = std::exp(M_PI_2 * std::sinh(t));
    if (u == 0.0 || !std::isfinite(u)) return T(0);
    T lf = logf(u);
    if (std::real(lf) < -740.0) return T(0);
    return std::exp(lf) * (u * M_PI_2 * std::cosh(t));
  };
  constexpr double tmax = 4.6;
  double h = 0.5;
  T sum = node(0.0);
  for (int k = 1; k * h <= tmax; ++k) sum += node(k * h) + node(-k * h);
  T prev = sum * h;
  for (int level = 0; level < 8; ++level) {
    h /= 2;
    for (int k = 1; k * h <= tmax; k += 2) sum += node(k * h) + node(-k * h);
    T cur = sum * h;
    if (std::abs(cur - prev) <= rel_tol * std::abs(cur) && level >= 1) return cur;
    prev = cur;
  }
  return prev;
}

// U(a, b, r e^{i theta}) for a >= 1:
// r^{-a} e^{i phi a} / Gamma(a) int_0^inf exp(-u e^{i theta/4}) u^{a-1} (1 + u e^{i phi}/r)^{b-a-1} du
// with phi = -3 theta / 4, so the exponential decays along the rotated ray.
template <typename T>
T hyperu_integral(double a, double b, double r, double theta) {
  double c = b - a - 1.0;
  if constexpr (is_complex<T>::value) {
    double phi = -0.75 * theta;
    cplx rot = std::polar(1.0, theta / 4);
    cplx w = std::polar(1.0 / r, phi);
    cplx I = exp_sinh<cplx>([&](double u) { return -u * rot + (a - 1.0) * std::log(u) + c * std::log(1.0 + u * w); });
    return std::exp(cplx(-a * std::log(r) - std::lgamma(a), phi * a)) * I;
  } else {
    double I = exp_sinh<double>([&](double u) { return -u + (a - 1.0) * std::log(u) + c * std::log1p(u / r); });
    return std::exp(-a * std::log(r) - std::lgamma(a)) * I;
  }
}

template <typename T>
T hyperu_impl(double a, double b, double r, double theta) {
  if (!(r > 0.0)) throw Error("hyperu requires a nonzero argument");
  if (a >= 1.0) return hyperu_integral<T>(a, b, r, theta);
  // Downward recurrence from a+N >= 1:
  // U(a-1) = -(b - 2a - z) U(a) - a (a - b + 1) U(a+1)
  int N = static_cast<int>(std::ceil(1.0 - a));
  T z;
  if constexpr (is_complex<T>::value)
    z = std::polar(r, theta);
  else
    z = r;
  T u1 = hyperu_integral<T>(a + N, b, r, theta);
  T u2 = hyperu_integral<T>(a + N + 1, b, r, theta);
  for (int i = N; i >= 1; --i) {
    double ai = a + i;
    T u0 = -(b - 2 * ai - z) * u1 - ai * (ai - b + 1) * u2;
    u2 = u1;
    u1 = u0;
  }
  return u1;
}

template <typename P>
P kummer_m(P mu, P nu, double y) {
  P b = 1.0 + 2.0 * nu;
  double br = std::real(b);
  if (std::imag(b) == 0.0 && br <= 0.0 && br == std::round(br))
    throw Error("parameter singularity: 1 + 2 nu is a nonpositive integer");
  P a = nu - mu + 0.5;
  P term = 1.0, sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + static_cast<double>(k)) / (b + static_cast<double>(k)) * y / (k + 1.0);
    sum += term;
    if (k > y && std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return std::exp(-y / 2 + (nu + 0.5) * std::log(y)) * sum;
}

}  // namespace

cplx hyperu(double a, double b, double r, double theta) { return hyperu_impl<cplx>(a, b, r, theta); }
double hyperu(double a, double b, double x) { return hyperu_impl<double>(a, b, x, 0.0); }

double whittaker_M(const WhittakerParams& p) {
  if (!(p.y > 0)) throw Error("whittaker_M requires y > 0");
  return kummer_m<double>(p.mu, p.nu, p.y);
}

cplx whittaker_M(cplx mu, cplx nu, double y) {
  if (!(y > 0)) throw Error("whittaker_M requires y > 0");
  return kummer_m<cplx>(mu, nu, y);
}

double whittaker_W(const WhittakerParams& p) {
  if (!(p.y > 0)) throw Error("whittaker_W requires y > 0");
  double nu = std::abs(p.nu);
  double u = hyperu(0.5 + nu - p.mu, 1.0 + 2 * nu, p.y);
  return std::exp(-p.y / 2 + (nu + 0.5) * std::log(p.y)) * u;
}

cplx whittaker_W(double mu, double nu, double r, double theta) {
  nu = std::abs(nu);
  cplx u = hyperu(0.5 + nu - mu, 1.0 + 2 * nu, r, theta);
  cplx z = std::polar(r, theta);
  cplx logpre = -z / 2.0 + (nu + 0.5) * cplx(std::log(r), theta);
  return std::exp(logpre) * u;
}

cplx mplus(const WhittakerParams& p) {
  if (!(p.y > 0)) throw Error("mplus requires y > 0");
  return whittaker_W(-p.mu, p.nu, p.y, M_PI);
}

cplx whittaker_s_deriv(const WhittakerParams& p, int j, WhittakerKind which, double step) {
  if (j < 0) throw Error("derivative order must be nonnegative");
  auto f = [&](double nu) -> cplx {
    WhittakerParams q{p.mu, nu, p.y};
    return which == WhittakerKind::W ? cplx(whittaker_W(q)) : mplus(q);
  };
  return fd_derivatives<cplx>(f, p.nu, j, step)[static_cast<size_t>(j)];
}

std::vector<cplx> u_derivatives(int k, int n, int jmax, Sign sign, double y, double step) {
  if (!(y > 0)) throw Error("u_eval requires y > 0");
  std::vector<cplx> out(static_cast<size_t>(jmax + 1));
  if (n == 0) {
    double L = std::log(y);
    double base = sign == Sign::Plus ? 1.0 : std::pow(y, 1.0 - k);
    double sgn = 1.0;
    double Lp = 1.0;
    for (int j = 0; j <= jmax; ++j) {
      out[static_cast<size_t>(j)] = (sign == Sign::Plus ? 1.0 : sgn) * Lp * base;
      Lp *= L;
      sgn = -sgn;
    }
    return out;
  }
  double mu = (n > 0 ? 1 : -1) * k / 2.0;
  double t = 4 * M_PI * std::abs(n) * y;
  double scale = std::pow(y, -k / 2.0);
  auto f = [&](double s) -> cplx {
    WhittakerParams p{mu, s - 0.5, t};
    return sign == Sign::Minus ? cplx(whittaker_W(p)) : mplus(p);
  };
  auto d = fd_derivatives<cplx>(f, k / 2.0, jmax, step);
  for (int j = 0; j <= jmax; ++j) out[static_cast<size_t>(j)] = scale * d[static_cast<size_t>(j)];
  return out;
}

cplx u_eval(int k, int n, int j, Sign sign, double y, double step) {
  return u_derivatives(k, n, j, sign, y, step)[static_cast<size_t>(j)];
}

}  // namespace polymaass
