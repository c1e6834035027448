#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "polymaass/jet.hpp"
#include "polymaass/point.hpp"

namespace polymaass {

// K(m,n,c) = sum over units d mod c of e^{2 pi i (m a + n d)/c}, a d = 1 mod c.
double kloosterman_sum(long m, long n, long c);

// c_c(m) = K(m,0,c), via sum_{d | gcd(c,m)} mu(c/d) d.
long ramanujan_sum(long c, long m);

// K(m, n, c) for c = 1..c_max and all n in [n_lo, n_hi], computed in one
// sweep per modulus. Entry [n - n_lo][c - 1].
std::vector<std::vector<double>> kloosterman_table(long m, long n_lo, long n_hi, long c_max);

// Cached K(m,n,c), c = 1..c_max; prefetch whole windows to amortize.
std::shared_ptr<const std::vector<double>> kloosterman_row(long m, long n, long c_max);
void kloosterman_prefetch(long m, long n_lo, long n_hi, long c_max);

struct LSeriesSpec {
  long m = 1;
  long n = 0;
  cplx s = 1.0;
  long c_max = 10000;
};

struct LSeriesResult {
  double value = 0.0;
  double abs_sum = 0.0;        // sum of |terms|, the pre-cancellation size
  double tail_estimate = 0.0;  // reported, never added
  long terms = 0;              // moduli actually summed
};

// Optional override of K(m,n,c), for synthetic-injection tests.
using KloostermanProvider = std::function<double(long m, long n, long c)>;

LSeriesResult l_series(const LSeriesSpec& spec, const KloostermanProvider& provider = {});

// L_{m,0}(s) = sigma_{1-2s}(|m|) / zeta(2s), for real s > 1/2.
double l_series_zero_closed(long m, double s);

cplx g_coeff(int k, long m, long n, cplx s);
// Taylor jet of g_{k,m,n}(s0 + eps) for s0 = x0 / 2 with integer x0.
Jet g_coeff_jet(int k, long m, long n, int two_s0, int order);

struct WeilViolation {
  long m, n, c;
  double value, bound;
};
// Samples triples and reports |K| > d(c) sqrt(c) sqrt(gcd(m,n,c)).
std::vector<WeilViolation> weil_bound_scan(long m_max, long n_max, long c_max);

}  // namespace polymaass
