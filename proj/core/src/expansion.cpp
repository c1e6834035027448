#include "polymaass/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "polymaass/finite_difference.hpp"
#include "polymaass/jet.hpp"
#include "polymaass/kloosterman.hpp"
#include "polymaass/modforms.hpp"
#include "polymaass/special.hpp"

namespace polymaass {

double FourierWhittakerExpansion::max_abs() const {
  double m = 0.0;
  for (const auto& [key, c] : cminus) m = std::max(m, std::abs(c));
  for (const auto& [key, c] : cplus) m = std::max(m, std::abs(c));
  return m;
}

void FourierWhittakerExpansion::refresh_support() {
  exact_plus_support.clear();
  for (const auto& [key, c] : cplus)
    if (key.first != 0 && c != 0.0) exact_plus_support.insert(key.first);
}

namespace {

bool is_zero(const Jet& j) {
  for (int i = 0; i <= j.order(); ++i)
    if (j[i] != 0.0) return false;
  return true;
}

Jet jet_from_derivatives(const std::vector<double>& d) {
  Jet out(static_cast<int>(d.size()) - 1);
  double fact = 1.0;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i > 0) fact *= static_cast<double>(i);
    out[static_cast<int>(i)] = d[i] / fact;
  }
  return out;
}

}  // namespace

FourierWhittakerExpansion taylor_expansion(const PoincareSpec& spec, const TruncationPolicy& policy) {
  policy.validate();
  const int k = spec.k;
  const long m = spec.m;
  const int r = spec.r;
  if (k % 2 != 0) throw Error("weight must be even");
  if (m == 0) throw Error("m = 0 Taylor coefficients are only available through the closed forms");
  if (r < 0) throw Error("Taylor order r must be nonnegative");

  const bool fbranch = k <= 0;
  const int two_s0 = fbranch ? 2 - k : k;
  const int s0 = two_s0 / 2;
  const double tau = fbranch ? -1.0 : 1.0;
  const double norm = (((k / 2) % 2 == 0) ? 1.0 : -1.0) * std::pow(4 * M_PI, k / 2.0);  // (-4 pi)^{k/2}
  const int mu = (m > 0 ? 1 : -1) * k / 2;
  const long N = policy.n_max;

  FourierWhittakerExpansion e;
  e.k = k;
  e.r = r + 1;
  e.n_min = std::min(-N, m);
  e.n_max = std::max(N, m);

  std::vector<double> inv_fact(static_cast<size_t>(r + 1), 1.0);
  for (int j = 1; j <= r; ++j) inv_fact[static_cast<size_t>(j)] = inv_fact[static_cast<size_t>(j - 1)] / j;

  auto put = [&](std::map<FourierWhittakerExpansion::Key, cplx>& table, long n, const Jet& X) {
    double tj = 1.0;
    for (int j = 0; j <= r; ++j) {
      cplx c = tj * X[r - j] * inv_fact[static_cast<size_t>(j)] / norm;
      if (c != 0.0) table[{n, j}] += c;
      tj *= tau;
    }
  };

  const Jet g2s = jet_gamma(two_s0, 2.0, r);
  const Jet phase = jet_exp(Jet::linear(r, cplx(0, -M_PI * s0), cplx(0, -M_PI)));
  put(e.cminus, m, g2s * jet_rgamma(s0 + mu, 1.0, r) * phase);
  put(e.cplus, m, g2s * jet_rgamma(s0 - mu, 1.0, r));

  const double h = policy.fd_step_s;
  {
    Jet g0 = g_coeff_jet(k, m, 0, two_s0, r);
    if (!is_zero(g0)) {
      auto L0 = fd_derivatives<double>([&](double s) { return l_series_zero_closed(m, s); }, s0, r, h);
      put(fbranch ? e.cplus : e.cminus, 0, g0 * jet_from_derivatives(L0));
    }
  }

  std::vector<long> indices;
  for (long n = -N; n <= N; ++n)
    if (n != 0) indices.push_back(n);
  if (std::abs(m) > N) indices.push_back(m);
  kloosterman_prefetch(m, -N, N, policy.c_max);

  for (long n : indices) {
    Jet g = g_coeff_jet(k, m, n, two_s0, r);
    if (is_zero(g)) continue;
    auto L = fd_derivatives<double>([&](double s) { return l_series({m, n, s, policy.c_max}).value; }, s0, r, h);
    put(e.cminus, n, g * jet_from_derivatives(L));
  }
  e.refresh_support();
  return e;
}

cplx expansion_eval(const FourierWhittakerExpansion& e, EvalPoint z, double fd_step_s) {
  cplx total = 0.0;
  auto run = [&](const std::map<FourierWhittakerExpansion::Key, cplx>& table, Sign sign) {
    auto it = table.begin();
    while (it != table.end()) {
      long n = it->first.first;
      auto end = it;
      int jmax = 0;
      while (end != table.end() && end->first.first == n) {
        jmax = std::max(jmax, end->first.second);
        ++end;
      }
      std::vector<cplx> u = u_derivatives(e.k, static_cast<int>(n), jmax, sign, z.y, fd_step_s);
      cplx part = 0.0;
      for (; it != end; ++it) part += it->second * u[static_cast<size_t>(it->first.second)];
      total += part * std::polar(1.0, 2 * M_PI * static_cast<double>(n) * z.x);
    }
  };
  run(e.cminus, Sign::Minus);
  run(e.cplus, Sign::Plus);
  return total;
}

void accumulate(FourierWhittakerExpansion& acc, const FourierWhittakerExpansion& e, cplx c) {
  if (acc.k != e.k) throw Error("cannot combine expansions of different weights");
  acc.r = std::max(acc.r, e.r);
  acc.n_min = std::min(acc.n_min, e.n_min);
  acc.n_max = std::max(acc.n_max, e.n_max);
  for (const auto& [key, v] : e.cminus) acc.cminus[key] += c * v;
  for (const auto& [key, v] : e.cplus) acc.cplus[key] += c * v;
  acc.refresh_support();
}

FourierWhittakerExpansion tilde_combination(TildeKind kind, int k, long m, int r, const TruncationPolicy& policy) {
  if (m == 0) throw Error("m = 0 (Eisenstein) tilde combination is out of numerical scope");
  const int ell = ell_index(k).ell;
  FourierWhittakerExpansion acc;
  acc.k = k;
  acc.n_min = acc.n_max = m;
  if (kind == TildeKind::F) {
    if (k > 0) throw Error("tilde F requires k <= 0");
    if (r < 1) throw Error("tilde F requires r >= 1");
    if (m > ell) throw Error("tilde F requires m <= l_k = " + std::to_string(ell));
    auto base = [&](long n) { return taylor_expansion({k, n, r - 1, 0.0}, policy); };
    accumulate(acc, base(m), std::pow(static_cast<double>(std::abs(m)), -k / 2.0));
    if (ell + 1 < 0) {
      BasisElement f = duke_jenkins(k, static_cast<int>(-m), 1);
      for (long n = ell + 1; n < 0; ++n) {
        double a = f.a(static_cast<int>(n)).get_d();
        if (a != 0.0) accumulate(acc, base(n), a * std::pow(static_cast<double>(-n), -k / 2.0));
      }
    }
  } else {
    if (k < 2) throw Error("tilde G requires k >= 2");
    if (r < 0) throw Error("Taylor order r must be nonnegative");
    if (m <= ell) throw Error("tilde G requires m > l_k = " + std::to_string(ell));
    auto base = [&](long n) { return taylor_expansion({k, n, r, 0.0}, policy); };
    accumulate(acc, base(m), std::pow(static_cast<double>(m), k / 2.0 - 1));
    for (long n = 1; n <= ell; ++n) {
      BasisElement f = duke_jenkins(k, static_cast<int>(-n), static_cast<int>(m) + 1);
      double a = f.a(static_cast<int>(m)).get_d();
      if (a != 0.0) accumulate(acc, base(n), -a * std::pow(static_cast<double>(n), k / 2.0 - 1));
    }
  }
  return acc;
}

}  // namespace polymaass
