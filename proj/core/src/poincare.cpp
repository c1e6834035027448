#include "polymaass/poincare.hpp"

#include <cmath>
#include <numeric>
#include <tuple>

#include "polymaass/kloosterman.hpp"
#include "polymaass/special.hpp"
#include "polymaass/summation.hpp"

namespace polymaass {

namespace {

class ComplexSum {
 public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

double sgn(long v) { return v > 0 ? 1.0 : -1.0; }

long inverse_mod(long d, long c) {
  long r0 = c, r1 = ((d % c) + c) % c, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return ((t0 % c) + c) % c;
}

cplx ipow(cplx w, int k) {
  if (k < 0) return 1.0 / ipow(w, -k);
  cplx r = 1.0;
  while (k) {
    if (k & 1) r *= w;
    k >>= 1;
    if (k) w *= w;
  }
  return r;
}

double neg_power_sign(int k) { return ((k / 2) % 2 == 0) ? 1.0 : -1.0; }  // (-1)^{k/2}

}  // namespace

cplx phi_eval(int k, long m, EvalPoint z, cplx s) {
  if (m == 0) throw Error("phi_eval requires m != 0");
  double t = 4 * M_PI * std::abs(static_cast<double>(m)) * z.y;
  cplx M = whittaker_M(cplx(sgn(m) * k / 2.0), s - 0.5, t);
  return std::pow(4 * M_PI * z.y, -k / 2.0) * M * std::polar(1.0, 2 * M_PI * static_cast<double>(m) * z.x);
}

DirectSum poincare_direct_sum(const PoincareSpec& spec, EvalPoint z, double R) {
  if (!(spec.s.real() > 1.0)) throw Error("outside direct-sum region: Re(s) must exceed 1");
  cplx zz = z.z();
  auto coset_sum = [&](double radius, long* count) {
    ComplexSum acc;
    acc.add(phi_eval(spec.k, spec.m, z, spec.s));
    long n = 1;
    long cmax = static_cast<long>(std::floor(radius / z.y));
    for (long c = 1; c <= cmax; ++c) {
      double rem = radius * radius - static_cast<double>(c * c) * z.y * z.y;
      if (rem < 0) break;
      double half = std::sqrt(rem);
      double center = -static_cast<double>(c) * z.x;
      for (long d = static_cast<long>(std::ceil(center - half)); d <= static_cast<long>(std::floor(center + half)); ++d) {
        if (std::gcd(c, d) != 1) continue;
        cplx w = static_cast<double>(c) * zz + static_cast<double>(d);
        long a = c == 1 ? 0 : inverse_mod(d, c);
        cplx gz = static_cast<double>(a) / static_cast<double>(c) - 1.0 / (static_cast<double>(c) * w);
        acc.add(ipow(w, -spec.k) * phi_eval(spec.k, spec.m, EvalPoint(gz), spec.s));
        ++n;
      }
    }
    if (count) *count = n;
    return acc.value();
  };
  DirectSum out{};
  out.value = coset_sum(R, &out.cosets);
  out.tail_estimate = std::abs(out.value - coset_sum(R / 2, nullptr));
  return out;
}

double direct_sum_radius(const TruncationPolicy& policy) {
  return 10.0 * std::sqrt(static_cast<double>(policy.c_max));
}

cplx poincare_direct(const PoincareSpec& spec, EvalPoint z, const TruncationPolicy& policy) {
  policy.validate();
  return poincare_direct_sum(spec, z, direct_sum_radius(policy)).value;
}

FourierTerm poincare_fourier_term(const PoincareSpec& spec, long n, double y, const TruncationPolicy& policy) {
  if (spec.m == 0) throw Error("Poincare series requires m != 0");
  if (spec.s.imag() != 0.0) throw Error("poincare_fourier supports real s only");
  double s = spec.s.real();
  int k = spec.k;
  double pre = neg_power_sign(k) * std::pow(4 * M_PI * y, -k / 2.0);  // (-4 pi y)^{-k/2}
  FourierTerm out{0.0, 0.0, 0.0};
  if (n == spec.m) {
    WhittakerParams p{sgn(spec.m) * k / 2.0, s - 0.5, 4 * M_PI * std::abs(static_cast<double>(spec.m)) * y};
    out.value = std::pow(4 * M_PI * y, -k / 2.0) * whittaker_M(p);
    out.size = std::abs(out.value);
  }
  if (n == 0) {
    cplx g = g_coeff(k, spec.m, 0, s);
    double L = l_series_zero_closed(spec.m, s);
    cplx t = g * L * pre * std::pow(y, 1 - s);
    out.value += t;
    out.size += std::abs(t);
    return out;
  }
  cplx g = g_coeff(k, spec.m, n, s);
  if (g == 0.0) return out;
  LSeriesResult L = l_series({spec.m, n, s, policy.c_max});
  WhittakerParams p{sgn(n) * k / 2.0, s - 0.5, 4 * M_PI * std::abs(static_cast<double>(n)) * y};
  double W = whittaker_W(p);
  out.value += g * L.value * pre * W;
  out.size += std::abs(g * pre * W) * L.abs_sum;
  out.tail_estimate = std::abs(g * pre * W) * L.tail_estimate;
  return out;
}

cplx poincare_fourier(const PoincareSpec& spec, EvalPoint z, const TruncationPolicy& policy) {
  policy.validate();
  long N = policy.n_max;
  kloosterman_prefetch(spec.m, -N, N, policy.c_max);
  ComplexSum acc;
  for (long n = -N; n <= N; ++n) {
    cplx t = poincare_fourier_term(spec, n, z.y, policy).value;
    acc.add(t * std::polar(1.0, 2 * M_PI * static_cast<double>(n) * z.x));
  }
  if (std::abs(spec.m) > N) {
    acc.add(phi_eval(spec.k, spec.m, z, spec.s));
  }
  return acc.value();
}

LatticeSum eisenstein_lattice_sum(int k, EvalPoint z, cplx s, long B) {
  if (!((2.0 * s + static_cast<double>(k)).real() > 2.0))
    throw Error("requires continuation (out of scope): Re(2s + k) must exceed 2");
  cplx zz = z.z();
  auto sum = [&](long bound) {
    ComplexSum acc;
    for (long m = 0; m <= bound; ++m) {
      for (long n = -bound; n <= bound; ++n) {
        if (m == 0 && n <= 0) continue;
        cplx w = static_cast<double>(m) * zz + static_cast<double>(n);
        acc.add(ipow(w, -k) * std::exp(-s * std::log(std::norm(w))));
      }
    }
    return 2.0 * acc.value() * std::exp(s * std::log(z.y));
  };
  LatticeSum out{};
  out.value = sum(B);
  double p = (2.0 * s + static_cast<double>(k)).real() - 2.0;
  out.tail_estimate = std::abs(out.value - sum(B / 2)) / (std::pow(2.0, p) - 1.0);
  return out;
}

long lattice_bound(const TruncationPolicy& policy) { return std::max<long>(policy.c_max / 20, 10); }

cplx eisenstein_lattice(int k, EvalPoint z, cplx s, const TruncationPolicy& policy) {
  policy.validate();
  return eisenstein_lattice_sum(k, z, s, lattice_bound(policy)).value;
}

cplx complete_eisenstein(int k, EvalPoint z, cplx s, const TruncationPolicy& policy) {
  double hk = k / 2.0;
  cplx pref = (s + hk) * (s + hk - 1.0) * std::exp(-(s + hk) * std::log(M_PI)) * gamma_fn(s + hk + std::abs(hk));
  return pref * eisenstein_lattice(k, z, s, policy);
}

}  // namespace polymaass
