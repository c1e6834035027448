#include "polymaass/operators.hpp"

#include <cmath>
#include <vector>

#include "polymaass/jet.hpp"
#include "polymaass/special.hpp"

namespace polymaass {

namespace {

void check_stencil(EvalPoint z, double h) {
  if (!(h > 0.0)) throw Error("finite-difference step must be positive");
  if (!(2 * h < z.y)) throw Error("stencil leaves the upper half plane");
}

struct Partials {
  cplx fx, fy, fxx, fyy;
};

Partials partials(const SampledForm& f, EvalPoint z, double h, bool second) {
  auto at = [&](double dx, double dy) { return f.evaluator(EvalPoint(z.x + dx, z.y + dy)); };
  cplx xp1 = at(h, 0), xm1 = at(-h, 0), xp2 = at(2 * h, 0), xm2 = at(-2 * h, 0);
  cplx yp1 = at(0, h), ym1 = at(0, -h), yp2 = at(0, 2 * h), ym2 = at(0, -2 * h);
  Partials p{};
  p.fx = (-xp2 + 8.0 * xp1 - 8.0 * xm1 + xm2) / (12 * h);
  p.fy = (-yp2 + 8.0 * yp1 - 8.0 * ym1 + ym2) / (12 * h);
  if (second) {
    cplx c = f.evaluator(z);
    p.fxx = (-xp2 + 16.0 * xp1 - 30.0 * c + 16.0 * xm1 - xm2) / (12 * h * h);
    p.fyy = (-yp2 + 16.0 * yp1 - 30.0 * c + 16.0 * ym1 - ym2) / (12 * h * h);
  }
  return p;
}

using Table = std::map<FourierWhittakerExpansion::Key, cplx>;

void add(Table& t, long n, int j, cplx v) {
  if (j < 0 || v == 0.0) return;
  t[{n, j}] += v;
}

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// d^i/ds^i at s = k'/2 of rho(s) = pi e^{-i pi mu'} / (Gamma(1 - s + mu') Gamma(s + mu')), so that
// conj(M^+_{mu',s-1/2}) = M^+_{mu',s-1/2} - 2i rho(s) W_{mu',s-1/2} for real s.
std::vector<cplx> rho_derivatives(int kp, long np, int order) {
  int mu = (np > 0 ? 1 : -1) * kp / 2;
  int s0 = kp / 2;
  Jet rho = jet_rgamma(1 - s0 + mu, -1.0, order) * jet_rgamma(s0 + mu, 1.0, order);
  double phase = (mu % 2 == 0) ? 1.0 : -1.0;
  std::vector<cplx> out(static_cast<size_t>(order + 1));
  double fact = 1.0;
  for (int i = 0; i <= order; ++i) {
    if (i > 0) fact *= i;
    out[static_cast<size_t>(i)] = M_PI * phase * rho[i] * fact;
  }
  return out;
}

}  // namespace

cplx xi_numeric(const SampledForm& f, EvalPoint z, double h) {
  check_stencil(z, h);
  Partials p = partials(f, z, h, false);
  cplx dzbar = 0.5 * (p.fx + cplx(0, 1) * p.fy);
  return cplx(0, 2) * std::pow(z.y, f.k) * std::conj(dzbar);
}

cplx laplacian_numeric(const SampledForm& f, EvalPoint z, double h) {
  check_stencil(z, h);
  Partials p = partials(f, z, h, true);
  return -z.y * z.y * (p.fxx + p.fyy) + cplx(0, f.k * z.y) * (p.fx + cplx(0, 1) * p.fy);
}

FourierWhittakerExpansion xi_on_expansion(const FourierWhittakerExpansion& e) {
  const int k = e.k;
  const int kp = 2 - k;
  FourierWhittakerExpansion out;
  out.k = kp;
  out.r = e.r;
  out.n_min = -e.n_max;
  out.n_max = -e.n_min;

  // Adds v * (-1)^i conj(u^{[i],sigma}_{k',np}) to the output table.
  auto emit = [&](Sign sigma, long np, int i, cplx v) {
    if (i < 0 || v == 0.0) return;
    double sg = (i % 2) ? -1.0 : 1.0;
    if (sigma == Sign::Minus) {
      add(out.cminus, np, i, sg * v);
      return;
    }
    add(out.cplus, np, i, sg * v);
    std::vector<cplx> rho = rho_derivatives(kp, np, i);
    for (int l = 0; l <= i; ++l)
      add(out.cminus, np, l, sg * v * cplx(0, -2) * binom(i, l) * rho[static_cast<size_t>(i - l)]);
  };

  for (const auto& [key, c] : e.cminus) {
    auto [n, j] = key;
    cplx cc = std::conj(c);
    if (n == 0) {
      double sg = (j % 2) ? -1.0 : 1.0;
      add(out.cplus, 0, j - 1, sg * static_cast<double>(j) * cc);
      add(out.cplus, 0, j, sg * (1.0 - k) * cc);
    } else if (n > 0) {
      emit(Sign::Minus, -n, j - 1, cc * static_cast<double>(j) * (1.0 - k));
      emit(Sign::Minus, -n, j - 2, -cc * static_cast<double>(j * (j - 1)));
    } else {
      emit(Sign::Minus, -n, j, -cc);
    }
  }
  for (const auto& [key, c] : e.cplus) {
    auto [n, j] = key;
    cplx cc = std::conj(c);
    if (n == 0) {
      double sg = ((j - 1) % 2) ? -1.0 : 1.0;
      add(out.cminus, 0, j - 1, sg * static_cast<double>(j) * cc);
    } else if (n > 0) {
      emit(Sign::Plus, -n, j, -cc);
    } else {
      emit(Sign::Plus, -n, j - 1, cc * static_cast<double>(j) * (1.0 - k));
      emit(Sign::Plus, -n, j - 2, -cc * static_cast<double>(j * (j - 1)));
    }
  }
  out.refresh_support();
  return out;
}

FourierWhittakerExpansion laplacian_on_expansion(const FourierWhittakerExpansion& e) {
  FourierWhittakerExpansion out;
  out.k = e.k;
  out.r = e.r;
  out.n_min = e.n_min;
  out.n_max = e.n_max;
  auto apply = [&](const Table& in, Table& dst) {
    for (const auto& [key, c] : in) {
      auto [n, j] = key;
      add(dst, n, j - 1, static_cast<double>(j) * (1.0 - e.k) * c);
      add(dst, n, j - 2, -static_cast<double>(j) * (j - 1) * c);
    }
  };
  apply(e.cminus, out.cminus);
  apply(e.cplus, out.cplus);
  out.refresh_support();
  return out;
}

namespace {

// |c| scaled by |u^{[0],+-}_{k,n}(1)|.
class WeightedSize {
 public:
  explicit WeightedSize(int k) : k_(k) {}

  double operator()(long n, Sign sign, cplx c) {
    if (c == 0.0) return 0.0;
    auto key = std::make_pair(n, sign == Sign::Plus);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      double w = std::abs(u_derivatives(k_, static_cast<int>(n), 0, sign, 1.0, 1e-3)[0]);
      it = cache_.emplace(key, w).first;
    }
    return std::abs(c) * it->second;
  }

  double max(const FourierWhittakerExpansion& e) {
    double m = 0.0;
    for (const auto& [key, c] : e.cminus) m = std::max(m, (*this)(key.first, Sign::Minus, c));
    for (const auto& [key, c] : e.cplus) m = std::max(m, (*this)(key.first, Sign::Plus, c));
    return m;
  }

 private:
  int k_;
  std::map<std::pair<long, bool>, double> cache_;
};

}  // namespace

double depth_classify(const FourierWhittakerExpansion& e, double rel_tol) {
  WeightedSize size(e.k);
  const double scale = size.max(e);
  if (scale == 0.0) return 0.0;
  const double tol = rel_tol * scale;

  int r = 0;
  FourierWhittakerExpansion cur = e;
  while (size.max(cur) > tol) {
    cur = laplacian_on_expansion(cur);
    ++r;
  }
  if (r == 0) return 0.0;

  for (const auto& [key, c] : e.cminus)
    if (key.second == r - 1 && key.first <= 0 && size(key.first, Sign::Minus, c) > tol) return r;
  for (const auto& [key, c] : e.cplus)
    if (key.second == r - 1 && key.first > 0 && size(key.first, Sign::Plus, c) > tol) return r;
  return r - 0.5;
}

}  // namespace polymaass
