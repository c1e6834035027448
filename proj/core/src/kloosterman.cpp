#include "polymaass/kloosterman.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "polymaass/special.hpp"
#include "polymaass/summation.hpp"

namespace polymaass {

namespace {

long mod(long a, long c) {
  long r = a % c;
  return r < 0 ? r + c : r;
}

// Inverse of d mod c, or 0 when gcd(d, c) != 1.
long inverse_mod(long d, long c) {
  long r0 = c, r1 = d, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return 0;
  return mod(t0, c);
}

// Moebius function by sieve, grown on demand.
int moebius(long n) {
  static std::mutex mu;
  static std::vector<signed char> table{0, 1};
  std::lock_guard<std::mutex> lock(mu);
  if (n >= static_cast<long>(table.size())) {
    long N = std::max(n + 1, 2 * static_cast<long>(table.size()));
    std::vector<signed char> t(static_cast<size_t>(N), 1);
    std::vector<bool> composite(static_cast<size_t>(N), false);
    t[0] = 0;
    for (long p = 2; p < N; ++p) {
      if (composite[static_cast<size_t>(p)]) continue;
      for (long q = p; q < N; q += p) {
        if (q > p) composite[static_cast<size_t>(q)] = true;
        t[static_cast<size_t>(q)] = static_cast<signed char>(-t[static_cast<size_t>(q)]);
      }
      if (p <= (N - 1) / p)
        for (long q = p * p; q < N; q += p * p) t[static_cast<size_t>(q)] = 0;
    }
    table.swap(t);
  }
  return table[static_cast<size_t>(n)];
}

}  // namespace

double kloosterman_sum(long m, long n, long c) {
  if (c <= 0) throw Error("kloosterman_sum requires c >= 1");
  if (c == 1) return 1.0;
  double re = 0.0, im = 0.0;
  long mm = mod(m, c), nn = mod(n, c);
  for (long d = 1; d < c; ++d) {
    long a = inverse_mod(d, c);
    if (a == 0) continue;
    double phase = 2 * M_PI * static_cast<double>(mod(mm * a + nn * d, c)) / static_cast<double>(c);
    re += std::cos(phase);
    im += std::sin(phase);
  }
  if (std::abs(im) >= 1e-10 * static_cast<double>(c))
    throw Error("internal: Kloosterman sum with imaginary residue " + std::to_string(im));
  return re;
}

long ramanujan_sum(long c, long m) {
  if (c <= 0) throw Error("ramanujan_sum requires c >= 1");
  long g = std::gcd(c, std::abs(m));
  if (m == 0) g = c;
  long acc = 0;
  for (long d = 1; d * d <= g; ++d) {
    if (g % d) continue;
    acc += moebius(c / d) * d;
    long e = g / d;
    if (e != d) acc += moebius(c / e) * e;
  }
  return acc;
}

std::vector<std::vector<double>> kloosterman_table(long m, long n_lo, long n_hi, long c_max) {
  if (c_max < 1 || n_hi < n_lo) throw Error("kloosterman_table: empty range");
  size_t width = static_cast<size_t>(n_hi - n_lo + 1);
  std::vector<std::vector<double>> out(width, std::vector<double>(static_cast<size_t>(c_max)));
  for (auto& row : out) row[0] = 1.0;
  std::vector<double> cosv, acc(width);
  for (long c = 2; c <= c_max; ++c) {
    cosv.resize(static_cast<size_t>(c));
    for (long t = 0; 2 * t <= c; ++t) {
      double v = std::cos(2 * M_PI * static_cast<double>(t) / static_cast<double>(c));
      cosv[static_cast<size_t>(t)] = v;
      cosv[static_cast<size_t>((c - t) % c)] = v;
    }
    std::fill(acc.begin(), acc.end(), 0.0);
    long mm = mod(m, c);
    long lo = mod(n_lo, c);
    for (long d = 1; d < c; ++d) {
      long a = inverse_mod(d, c);
      if (a == 0) continue;
      long idx = (mm * a + lo * d) % c;
      for (size_t i = 0; i < width; ++i) {
        acc[i] += cosv[static_cast<size_t>(idx)];
        idx += d;
        if (idx >= c) idx -= c;
      }
    }
    for (size_t i = 0; i < width; ++i) out[i][static_cast<size_t>(c - 1)] = acc[i];
  }
  return out;
}

namespace {

struct RowCache {
  std::mutex mu;
  std::map<std::pair<long, long>, std::shared_ptr<const std::vector<double>>> rows;
};

RowCache& row_cache() {
  static RowCache cache;
  return cache;
}

// K(-m,-n,c) = K(m,n,c); store with m >= 0.
std::pair<long, long> row_key(long m, long n) { return m < 0 ? std::make_pair(-m, -n) : std::make_pair(m, n); }

}  // namespace

void kloosterman_prefetch(long m, long n_lo, long n_hi, long c_max) {
  if (m < 0) {
    m = -m;
    std::swap(n_lo, n_hi);
    n_lo = -n_lo;
    n_hi = -n_hi;
  }
  auto& cache = row_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  long lo = n_hi + 1, hi = n_lo - 1;
  for (long n = n_lo; n <= n_hi; ++n) {
    auto it = cache.rows.find({m, n});
    if (it == cache.rows.end() || static_cast<long>(it->second->size()) < c_max) {
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
  }
  if (lo > hi) return;
  auto table = kloosterman_table(m, lo, hi, c_max);
  for (long n = lo; n <= hi; ++n) {
    auto& slot = cache.rows[{m, n}];
    if (!slot || static_cast<long>(slot->size()) < c_max)
      slot = std::make_shared<const std::vector<double>>(std::move(table[static_cast<size_t>(n - lo)]));
  }
}

std::shared_ptr<const std::vector<double>> kloosterman_row(long m, long n, long c_max) {
  auto key = row_key(m, n);
  {
    auto& cache = row_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.rows.find(key);
    if (it != cache.rows.end() && static_cast<long>(it->second->size()) >= c_max) return it->second;
  }
  if (key.first == 0 || key.second == 0) {
    long other = key.first == 0 ? key.second : key.first;
    auto row = std::make_shared<std::vector<double>>(static_cast<size_t>(c_max));
    for (long c = 1; c <= c_max; ++c) (*row)[static_cast<size_t>(c - 1)] = static_cast<double>(ramanujan_sum(c, other));
    auto& cache = row_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.rows[key] = row;
  }
  kloosterman_prefetch(key.first, key.second, key.second, c_max);
  auto& cache = row_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.rows.at(key);
}

namespace {

// Bessel J or I of fixed order at many arguments: power series for small x
// with the Gamma factors hoisted, library routine otherwise.
class FixedOrderBessel {
 public:
  FixedOrderBessel(BesselKind kind, double order) : kind_(kind), nu_(order) {
    double lg = std::lgamma(order + 1);
    rg_.resize(kTerms);
    for (int k = 0; k < kTerms; ++k) {
      rg_[static_cast<size_t>(k)] = std::exp(-lg - std::lgamma(k + 1.0));
      lg += std::log(order + k + 1);
    }
  }

  double operator()(double x) const {
    if (x > 2.0) return bessel(kind_, nu_, x);
    double q = x * x / 4;
    if (kind_ == BesselKind::J) q = -q;
    double acc = 0.0, p = 1.0;
    for (int k = 0; k < kTerms; ++k) {
      double t = p * rg_[static_cast<size_t>(k)];
      acc += t;
      if (std::abs(t) < 1e-18 * std::abs(acc)) break;
      p *= q;
    }
    return std::exp(nu_ * std::log(x / 2)) * acc;
  }

 private:
  static constexpr int kTerms = 24;
  BesselKind kind_;
  double nu_;
  std::vector<double> rg_;  // 1/(k! Gamma(nu+k+1))
};

}  // namespace

LSeriesResult l_series(const LSeriesSpec& spec, const KloostermanProvider& provider) {
  if (spec.m == 0) throw Error("l_series requires m != 0");
  if (spec.c_max < 1) throw Error("l_series requires c_max >= 1");
  if (spec.s.imag() != 0.0) throw Error("l_series supports real s only");
  double s = spec.s.real();
  long m = spec.m, n = spec.n;
  long C = spec.c_max;

  std::function<double(long)> term;
  double log_bound_const = 0.0;
  double nu = 2 * s - 1;
  bool bessel_case = n != 0;
  std::shared_ptr<const std::vector<double>> row;
  auto K = [&](long c) -> double {
    if (provider) return provider(m, n, c);
    return (*row)[static_cast<size_t>(c - 1)];
  };
  if (!provider) row = kloosterman_row(m, n, C);

  std::unique_ptr<FixedOrderBessel> B;
  double X = 0.0;
  if (n == 0) {
    if (!(s > 1.0 || (s == 1.0 && C >= 10000)))
      throw Error("divergent parameter region: n = 0 needs s > 1, or s = 1 with c_max >= 10000");
    term = [&](long c) { return K(c) * std::pow(static_cast<double>(c), -2 * s); };
  } else {
    if (!(s > 0.75)) throw Error("divergent parameter region: Bessel case needs s > 3/4");
    X = 4 * M_PI * std::sqrt(std::abs(static_cast<double>(m) * static_cast<double>(n)));
    B = std::make_unique<FixedOrderBessel>((m > 0) == (n > 0) ? BesselKind::J : BesselKind::I, nu);
    term = [&](long c) { return K(c) / static_cast<double>(c) * (*B)(X / static_cast<double>(c)); };
    if (nu > 1.0 + 1e-9) log_bound_const = nu * std::log(X / 2) - std::lgamma(nu + 1) - std::log(nu - 1);
  }

  // Checkpoints for the tail fit.
  long cps[4] = {C / 8, C / 4, C / 2, C};
  double partial[4] = {0, 0, 0, 0};

  constexpr long kChunk = 1024;
  CompensatedSum total, total_abs;
  LSeriesResult res;
  bool stopped = false;
  for (long c0 = 1; c0 <= C && !stopped; c0 += kChunk) {
    CompensatedSum chunk, chunk_abs;
    long c1 = std::min(C, c0 + kChunk - 1);
    for (long c = c0; c <= c1; ++c) {
      double t = term(c);
      chunk.add(t);
      chunk_abs.add(std::abs(t));
      res.terms = c;
      for (int i = 0; i < 4; ++i)
        if (c == cps[i]) partial[i] = total.value() + chunk.value();
      if (bessel_case && log_bound_const != 0.0 && (c & 31) == 0) {
        double xc = X / static_cast<double>(c);
        double log_tail = log_bound_const + xc * xc / 4 - (nu - 1) * std::log(static_cast<double>(c));
        double scale = std::max(total_abs.value() + chunk_abs.value(), 1e-300);
        if (log_tail < std::log(1e-17 * scale)) {
          stopped = true;
          res.tail_estimate = std::exp(log_tail);
          break;
        }
      }
    }
    total.add(chunk.value());
    total_abs.add(chunk_abs.value());
  }
  res.value = total.value();
  res.abs_sum = total_abs.value();
  if (!stopped && C >= 8) {
    double d2 = partial[2] - partial[1], d3 = partial[3] - partial[2];
    double rho = std::abs(d2) > 0 ? std::abs(d3) / std::abs(d2) : 0.0;
    res.tail_estimate = rho < 1.0 ? std::abs(d3) * rho / (1 - rho) : std::abs(d3);
  }
  return res;
}

double l_series_zero_closed(long m, double s) {
  if (m == 0) throw Error("l_series_zero_closed requires m != 0");
  if (!(s > 0.5)) throw Error("l_series_zero_closed requires s > 1/2");
  long am = std::abs(m);
  double sigma = 0.0;
  for (long d = 1; d <= am; ++d)
    if (am % d == 0) sigma += std::pow(static_cast<double>(d), 1 - 2 * s);
  return sigma / boost::math::zeta(2 * s);
}

namespace {

cplx rgamma(cplx s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real())) return 0.0;
  return 1.0 / gamma_fn(s);
}

}  // namespace

cplx g_coeff(int k, long m, long n, cplx s) {
  if (m == 0) throw Error("g_coeff requires m != 0");
  cplx two_s = 2.0 * s;
  if (two_s.imag() == 0.0 && two_s.real() <= 0.0 && two_s.real() == std::round(two_s.real()))
    throw Error("pole of Gamma(2s) at s = " + std::to_string(s.real()));
  cplx g2s = gamma_fn(two_s);
  double hk = k / 2.0;
  if (n != 0) {
    double sg = n > 0 ? 1.0 : -1.0;
    return g2s * 2.0 * M_PI * std::sqrt(std::abs(static_cast<double>(m) / static_cast<double>(n))) * rgamma(s + sg * hk);
  }
  if (two_s == 1.0) throw Error("pole of 1/(2s-1) at s = 1/2");
  double am = std::abs(static_cast<double>(m));
  return g2s * 4.0 * std::pow(cplx(M_PI), 1.0 + s) * std::pow(cplx(am), s) / (two_s - 1.0) * rgamma(s + hk) *
         rgamma(s - hk);
}

Jet g_coeff_jet(int k, long m, long n, int two_s0, int order) {
  if (m == 0) throw Error("g_coeff requires m != 0");
  if (two_s0 % 2) throw Error("g_coeff_jet requires an integral base point");
  int s0 = two_s0 / 2;
  Jet g = jet_gamma(two_s0, 2.0, order);
  if (n != 0) {
    int sg = n > 0 ? 1 : -1;
    g *= 2 * M_PI * std::sqrt(std::abs(static_cast<double>(m) / static_cast<double>(n)));
    return g * jet_rgamma(s0 + sg * k / 2, 1.0, order);
  }
  double lpm = std::log(M_PI) + std::log(std::abs(static_cast<double>(m)));
  Jet pw = jet_exp(Jet::linear(order, (1 + s0) * std::log(M_PI) + s0 * std::log(std::abs(static_cast<double>(m))), lpm));
  Jet inv = Jet::linear(order, 2.0 * s0 - 1.0, 2.0).reciprocal();
  g *= 4.0;
  return g * pw * inv * jet_rgamma(s0 + k / 2, 1.0, order) * jet_rgamma(s0 - k / 2, 1.0, order);
}

std::vector<WeilViolation> weil_bound_scan(long m_max, long n_max, long c_max) {
  std::vector<WeilViolation> out;
  for (long c = 1; c <= c_max; ++c) {
    long divisors = 0;
    for (long d = 1; d <= c; ++d) divisors += (c % d == 0);
    for (long m = 1; m <= m_max; ++m)
      for (long n = 1; n <= n_max; ++n) {
        double v = kloosterman_sum(m, n, c);
        double bound = static_cast<double>(divisors) * std::sqrt(static_cast<double>(c)) *
                       std::sqrt(static_cast<double>(std::gcd(std::gcd(m, n), c)));
        if (std::abs(v) > bound + 1e-9) out.push_back({m, n, c, v, bound});
      }
  }
  return out;
}

}  // namespace polymaass
