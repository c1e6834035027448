#include "polymaass/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "polymaass/expansion.hpp"
#include "polymaass/kloosterman.hpp"
#include "polymaass/modforms.hpp"
#include "polymaass/operators.hpp"
#include "polymaass/poincare.hpp"
#include "polymaass/special.hpp"
#include "polymaass/summation.hpp"

namespace polymaass {

namespace {

using Clock = std::chrono::steady_clock;
using Expansion = std::shared_ptr<const FourierWhittakerExpansion>;

constexpr double kBetaDelta = 2.840287;
constexpr long kRamanujanCmax = 100000;
// Stencil steps relative to y. Expansions carry finite-difference noise from the
// s-derivatives, so they get wider stencils than closed forms.
constexpr double kXiStep = 1e-3;
constexpr double kLaplaceStepExpansion = 5e-3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(cplx z) { return fmt(z.real()) + "," + fmt(z.imag()); }

Expansion expansion(int k, long m, int r, const TruncationPolicy& p) {
  using Key = std::tuple<int, long, int, long, int, double>;
  static std::mutex mu;
  static std::map<Key, Expansion> cache;
  Key key{k, m, r, p.c_max, p.n_max, p.fd_step_s};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto e = std::make_shared<const FourierWhittakerExpansion>(taylor_expansion({k, m, r, 0.0}, p));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, e).first->second;
}

std::string label(char kind, int k, long m, int r) {
  return std::string(1, kind) + "(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(r) + ")";
}

SampledForm sampled(const Expansion& e, double fd_step_s) {
  return {e->k, [e, fd_step_s](EvalPoint z) { return expansion_eval(*e, z, fd_step_s); }};
}

double rel(cplx a, cplx b, double scale) { return std::abs(a - b) / scale; }

// Scale for xi residuals: the largest of |rhs|, 2 y^k |df/dz| (the size xi would have if f were
// antiholomorphic) and 2 pi y^k |f| (the same for a unit-frequency term). z = i is a critical
// point of j, so no single one of these is reliable there.
double xi_scale(cplx rhs, const SampledForm& f, EvalPoint z, double h) {
  auto at = [&](double dx, double dy) { return f.evaluator(EvalPoint(z.x + dx, z.y + dy)); };
  cplx fx = (-at(2 * h, 0) + 8.0 * at(h, 0) - 8.0 * at(-h, 0) + at(-2 * h, 0)) / (12 * h);
  cplx fy = (-at(0, 2 * h) + 8.0 * at(0, h) - 8.0 * at(0, -h) + at(0, -2 * h)) / (12 * h);
  cplx dz = 0.5 * (fx - cplx(0, 1) * fy);
  double yk = std::pow(z.y, f.k);
  return std::max({std::abs(rhs), 2 * yk * std::abs(dz), 2 * M_PI * yk * std::abs(f.evaluator(z))});
}

using CheckFn = std::function<void(const SuiteOptions&, CheckReport&)>;

void check_golden(const SuiteOptions&, CheckReport& rep) {
  struct Golden {
    int m, n;
    const char* value;
  } golden[] = {{1, 1, "196884"}, {1, 2, "21493760"}, {2, 1, "42987520"}, {2, 2, "40491909396"}};
  long mismatches = 0;
  for (const auto& g : golden) {
    Rational a = duke_jenkins(0, g.m, g.n).a(g.n);
    rep.diagnostics["a0(" + std::to_string(g.m) + "," + std::to_string(g.n) + ")"] = rational_to_string(a);
    if (a != Rational(g.value)) ++mismatches;
  }
  rep.residual = static_cast<double>(mismatches);
  rep.tolerance = 0.0;
}

void check_duality(const SuiteOptions&, CheckReport& rep) {
  double worst = 0.0;
  long pairs = 0;
  for (int k : {-10, 0, 2, 4, 12}) {
    int ell = ell_index(k).ell;
    for (int m = std::max(1, -ell); m <= 10; ++m) {
      BasisElement f = duke_jenkins(k, m, 10);
      for (int n = std::max(1, ell + 1); n <= 10; ++n) {
        Rational a = f.a(n);
        Rational b = duke_jenkins(2 - k, n, m).a(m);
        Rational sum = a + b;
        worst = std::max(worst, std::abs(sum.get_d()));
        if (sum != 0) worst = std::max(worst, 1.0);
        ++pairs;
      }
    }
  }
  rep.inputs["weights"] = "-10,0,2,4,12";
  rep.inputs["range"] = "1..10";
  rep.diagnostics["pairs"] = std::to_string(pairs);
  rep.residual = worst;
  rep.tolerance = 0.0;
}

CheckFn check_ramanujan(long m) {
  return [m](const SuiteOptions&, CheckReport& rep) {
    CompensatedSum acc;
    for (long c = 1; c <= kRamanujanCmax; ++c)
      acc.add(static_cast<double>(ramanujan_sum(c, -m)) / (static_cast<double>(c) * static_cast<double>(c)));
    double partial = acc.value();
    double exact = 6.0 * divisor_sigma(m).get_d() / (static_cast<double>(m) * M_PI * M_PI);
    rep.inputs["m"] = std::to_string(m);
    rep.inputs["c_max"] = std::to_string(kRamanujanCmax);
    rep.diagnostics["partial"] = fmt(partial);
    rep.diagnostics["closed_form"] = fmt(exact);
    rep.residual = std::abs(partial - exact);
    rep.tolerance = 1e-3;
  };
}

// q^n coefficients of P_{12,1}(z, 6) divided by tau(n), n = 1..5.
std::vector<double> beta_ratios(const TruncationPolicy& p) {
  QSeries delta = delta_qexp(6);
  std::vector<double> ratios;
  for (int n = 1; n <= 5; ++n) {
    FourierTerm t = poincare_fourier_term({12, 1, 0, 6.0}, n, 1.0, p);
    double coeff = t.value.real() / std::exp(-2 * M_PI * n);
    ratios.push_back(coeff / delta.coeff(n).get_d());
  }
  return ratios;
}

void check_beta_constancy(const SuiteOptions& o, CheckReport& rep) {
  auto r = beta_ratios(o.policy);
  double worst = 0.0;
  for (size_t i = 0; i < r.size(); ++i) {
    rep.diagnostics["ratio_q" + std::to_string(i + 1)] = fmt(r[i]);
    worst = std::max(worst, std::abs(r[i] / r[0] - 1.0));
  }
  rep.inputs["k,m,s"] = "12,1,6";
  rep.residual = worst;
  rep.tolerance = 1e-6;
}

void check_beta_value(const SuiteOptions& o, CheckReport& rep) {
  auto r = beta_ratios(o.policy);
  rep.inputs["k,m,s"] = "12,1,6";
  rep.diagnostics["beta"] = fmt(r[0]);
  rep.residual = std::abs(r[0] - kBetaDelta);
  rep.tolerance = 1e-4;
}

void check_g2_jprime(const SuiteOptions& o, CheckReport& rep) {
  FourierTerm t = poincare_fourier_term({2, -1, 0, 1.0}, 1, 1.0, o.policy);
  double scale = std::exp(-2 * M_PI);
  double coeff = t.value.real() / scale;
  rep.inputs["k,m,s,n"] = "2,-1,1,1";
  rep.diagnostics["coefficient"] = fmt(coeff);
  rep.diagnostics["tail_estimate"] = fmt(t.tail_estimate / scale);
  rep.residual = std::abs(coeff + 196884.0) / 196884.0;
  rep.tolerance = 1e-2;
}

void check_cusp_k4(const SuiteOptions& o, CheckReport& rep) {
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    FourierTerm t = poincare_fourier_term({4, 1, 0, 2.0}, n, 1.0, o.policy);
    double ratio = std::abs(t.value) / t.size;
    rep.diagnostics["q" + std::to_string(n)] = fmt(ratio);
    worst = std::max(worst, ratio);
  }
  rep.inputs["k,m,s"] = "4,1,2";
  rep.residual = worst;
  rep.tolerance = 1e-5;
}

struct WParams {
  double mu, nu, y;
};

std::vector<WParams> whittaker_points(std::uint32_t seed, int count) {
  std::mt19937 gen(seed ^ 0x5bd1e995u);
  auto unit = [&] { return static_cast<double>(gen()) / 4294967296.0; };
  std::vector<WParams> out;
  for (int i = 0; i < count; ++i) out.push_back({-2.0 + 4.0 * unit(), 0.1 + 2.2 * unit(), 0.5 + 15.0 * unit()});
  return out;
}

void check_whittaker_ode(const SuiteOptions& o, CheckReport& rep) {
  double worst = 0.0;
  for (const auto& w : whittaker_points(o.seed, 20)) {
    double q = -0.25 + w.mu / w.y + (0.25 - w.nu * w.nu) / (w.y * w.y);
    double h = 2e-3 * w.y;
    for (int which = 0; which < 2; ++which) {
      auto f = [&](double t) {
        WhittakerParams p{w.mu, w.nu, t};
        return which == 0 ? whittaker_M(p) : whittaker_W(p);
      };
      double f0 = f(w.y);
      double d2 = (-f(w.y + 2 * h) + 16 * f(w.y + h) - 30 * f0 + 16 * f(w.y - h) - f(w.y - 2 * h)) / (12 * h * h);
      worst = std::max(worst, std::abs(d2 + q * f0) / (std::abs(d2) + std::abs(q * f0)));
    }
  }
  rep.inputs["samples"] = "20";
  rep.residual = worst;
  rep.tolerance = 1e-6;
}

void check_whittaker_wronskian(const SuiteOptions& o, CheckReport& rep) {
  double worst = 0.0;
  for (const auto& w : whittaker_points(o.seed + 1, 10)) {
    double h = 1e-3 * w.y;
    auto d = [&](auto f) { return (-f(w.y + 2 * h) + 8 * f(w.y + h) - 8 * f(w.y - h) + f(w.y - 2 * h)) / (12 * h); };
    auto M = [&](double t) { return whittaker_M({w.mu, w.nu, t}); };
    auto W = [&](double t) { return whittaker_W({w.mu, w.nu, t}); };
    double wr = M(w.y) * d(W) - d(M) * W(w.y);
    double exact = -std::tgamma(2 * w.nu + 1) / gamma_fn(w.nu - w.mu + 0.5).real();
    worst = std::max(worst, std::abs(wr - exact) / std::abs(exact));
  }
  rep.inputs["samples"] = "10";
  rep.residual = worst;
  rep.tolerance = 1e-8;
}

void check_whittaker_mmw(const SuiteOptions& o, CheckReport& rep) {
  std::vector<WParams> pts{{1.0, 0.3, 2.0}};
  for (const auto& w : whittaker_points(o.seed + 2, 5)) pts.push_back({w.mu, w.nu, std::min(w.y, 8.0)});
  double worst = 0.0;
  for (const auto& w : pts) {
    WhittakerParams p{w.mu, w.nu, w.y};
    double M = whittaker_M(p);
    cplx g = std::tgamma(1 + 2 * w.nu);
    cplx rhs = g / gamma_fn(w.nu - w.mu + 0.5) * std::polar(1.0, M_PI * w.mu) * mplus(p) +
               g / gamma_fn(w.nu + w.mu + 0.5) * std::polar(1.0, -M_PI * (w.nu - w.mu + 0.5)) * whittaker_W(p);
    worst = std::max(worst, std::abs(M - rhs) / std::abs(M));
  }
  rep.inputs["samples"] = std::to_string(pts.size());
  rep.residual = worst;
  rep.tolerance = 1e-8;
}

void check_whittaker_closed(const SuiteOptions&, CheckReport& rep) {
  double worst = 0.0;
  for (double t : {0.5, 2.0, 10.0}) {
    double a = whittaker_W({1.0, 0.5, t}), b = whittaker_W({0.0, -0.5, t});
    worst = std::max(worst, std::abs(a - t * std::exp(-t / 2)) / (t * std::exp(-t / 2)));
    worst = std::max(worst, std::abs(b - std::exp(-t / 2)) / std::exp(-t / 2));
  }
  rep.inputs["t"] = "0.5,2,10";
  rep.residual = worst;
  rep.tolerance = 1e-10;
}

CheckFn check_xi_table(int k, long m, int r) {
  return [=](const SuiteOptions& o, CheckReport& rep) {
    Expansion e = expansion(k, m, r, o.policy);
    FourierWhittakerExpansion xe = xi_on_expansion(*e);
    SampledForm f = sampled(e, o.policy.fd_step_s);
    double worst = 0.0;
    for (EvalPoint z : {EvalPoint(0, 1), EvalPoint(0.3, 0.8)}) {
      cplx num = xi_numeric(f, z, kXiStep * z.y);
      cplx tab = expansion_eval(xe, z, o.policy.fd_step_s);
      double res = rel(num, tab, xi_scale(tab, f, z, kXiStep * z.y));
      rep.diagnostics["z=" + fmt(z.z())] = fmt(res);
      worst = std::max(worst, res);
    }
    rep.inputs["form"] = label(k <= 0 ? 'F' : 'G', k, m, r);
    rep.residual = worst;
    rep.tolerance = 1e-5;
  };
}

const std::vector<EvalPoint>& recursion_points() {
  static const std::vector<EvalPoint> pts{EvalPoint(0.3, 0.8), EvalPoint(-0.2, 1.3), EvalPoint(0.41, 0.95)};
  return pts;
}

void check_recursion_f0(const SuiteOptions& o, CheckReport& rep) {
  Expansion F = expansion(0, -1, 1, o.policy);
  Expansion G1 = expansion(2, 1, 1, o.policy);
  Expansion G0 = expansion(2, 1, 0, o.policy);
  SampledForm f = sampled(F, o.policy.fd_step_s);
  double worst = 0.0;
  for (EvalPoint z : recursion_points()) {
    cplx lhs = xi_numeric(f, z, kXiStep * z.y);
    cplx rhs = 4 * M_PI * (expansion_eval(*G1, z, o.policy.fd_step_s) + expansion_eval(*G0, z, o.policy.fd_step_s));
    double res = rel(lhs, rhs, std::abs(rhs));
    rep.diagnostics["z=" + fmt(z.z())] = fmt(res);
    worst = std::max(worst, res);
  }
  rep.inputs["identity"] = "xi_0 F(0,-1,1) = 4pi (G(2,1,1) + G(2,1,0))";
  rep.residual = worst;
  rep.tolerance = 1e-4;
}

void check_recursion_g210(const SuiteOptions& o, CheckReport& rep) {
  Expansion G1 = expansion(2, 1, 1, o.policy);
  Expansion G0 = expansion(2, 1, 0, o.policy);
  double worst = 0.0;
  for (EvalPoint z : recursion_points()) {
    double res = std::abs(expansion_eval(*G0, z, o.policy.fd_step_s)) / std::abs(expansion_eval(*G1, z, o.policy.fd_step_s));
    worst = std::max(worst, res);
  }
  rep.inputs["ratio"] = "|G(2,1,0)| / |G(2,1,1)|";
  rep.residual = worst;
  rep.tolerance = 1e-4;
}

// xi_k of F_{k,m,r} or G_{k,m,r} against the recursion, via the exact table rule.
CheckFn check_recursion_table(int k, long m, int r) {
  return [=](const SuiteOptions& o, CheckReport& rep) {
    const double step = o.policy.fd_step_s;
    Expansion e = expansion(k, m, r, o.policy);
    FourierWhittakerExpansion xe = xi_on_expansion(*e);
    const double c = std::pow(4 * M_PI, 1 - k);
    auto term = [&](int rr, EvalPoint z) -> cplx {
      if (rr < 0) return 0.0;
      return expansion_eval(*expansion(2 - k, -m, rr, o.policy), z, step);
    };
    double worst = 0.0;
    for (EvalPoint z : recursion_points()) {
      cplx lhs = expansion_eval(xe, z, step);
      cplx rhs = (k <= 0) ? c * ((1.0 - k) * term(r, z) + term(r - 1, z)) : c * term(r - 1, z);
      double res = rel(lhs, rhs, xi_scale(rhs, sampled(e, step), z, kXiStep * z.y));
      worst = std::max(worst, res);
    }
    rep.inputs["form"] = label(k <= 0 ? 'F' : 'G', k, m, r);
    rep.residual = worst;
    rep.tolerance = 1e-4;
  };
}

void check_laplacian_recursion(const SuiteOptions& o, CheckReport& rep) {
  const double step = o.policy.fd_step_s;
  Expansion F1 = expansion(0, -1, 1, o.policy);
  Expansion F0 = expansion(0, -1, 0, o.policy);
  FourierWhittakerExpansion lap = laplacian_on_expansion(*F1);
  SampledForm f = sampled(F1, step);
  double worst = 0.0;
  for (EvalPoint z : recursion_points()) {
    cplx rhs = -expansion_eval(*F0, z, step);  // (k - 1) F_{k,m,0} at k = 0
    cplx table = expansion_eval(lap, z, step);
    cplx numeric = laplacian_numeric(f, z, kLaplaceStepExpansion * z.y);
    double scale = std::abs(rhs);
    worst = std::max({worst, rel(table, rhs, scale), rel(numeric, rhs, scale)});
  }
  rep.inputs["identity"] = "Delta_0 F(0,-1,1) = -F(0,-1,0)";
  rep.residual = worst;
  rep.tolerance = 1e-4;
}

void check_laplacian_table(const SuiteOptions& o, CheckReport& rep) {
  double worst = 0.0;
  for (auto [k, m, r] : {std::tuple{0, -1L, 1}, std::tuple{2, 1L, 1}, std::tuple{12, 1L, 1}, std::tuple{-10, -1L, 1}}) {
    Expansion e = expansion(k, m, r, o.policy);
    FourierWhittakerExpansion direct = laplacian_on_expansion(*e);
    FourierWhittakerExpansion composed = xi_on_expansion(xi_on_expansion(*e));
    FourierWhittakerExpansion diff = direct;
    accumulate(diff, composed, 1.0);  // direct - (-xi xi) = direct + xi xi
    double scale = std::max(direct.max_abs(), 1e-300);
    worst = std::max(worst, diff.max_abs() / scale);
  }
  rep.inputs["forms"] = "F(0,-1,1),G(2,1,1),G(12,1,1),F(-10,-1,1)";
  rep.residual = worst;
  rep.tolerance = 1e-12;
}

void check_kronecker(const SuiteOptions& o, CheckReport& rep) {
  SampledForm f{0, [](EvalPoint z) { return closed_form_eval(ClosedForm::F01, 0, z, 80); }};
  double worst = 0.0;
  for (EvalPoint z : {EvalPoint(0, 1), EvalPoint(0.25, 2)}) {
    cplx v = laplacian_numeric(f, z, o.policy.fd_step_z * z.y * 10);
    rep.diagnostics["z=" + fmt(z.z())] = fmt(v);
    worst = std::max(worst, std::abs(v + 1.0));
  }
  rep.residual = worst;
  rep.tolerance = 1e-5;
}

void check_direct_vs_fourier(const SuiteOptions& o, CheckReport& rep) {
  PoincareSpec spec{4, 1, 0, 1.6};
  EvalPoint z(0, 1);
  DirectSum d = poincare_direct_sum(spec, z, direct_sum_radius(o.policy));
  cplx f = poincare_fourier(spec, z, o.policy);
  rep.inputs["k,m,s"] = "4,1,1.6";
  rep.inputs["z"] = "0,1";
  rep.diagnostics["direct"] = fmt(d.value);
  rep.diagnostics["fourier"] = fmt(f);
  rep.diagnostics["cosets"] = std::to_string(d.cosets);
  rep.diagnostics["direct_tail"] = fmt(d.tail_estimate);
  rep.residual = std::abs(d.value - f) / std::abs(f);
  rep.tolerance = 1e-3;
}

struct FormId {
  int k;
  long m;
  int r;
};

const std::vector<FormId>& modularity_forms() {
  static const std::vector<FormId> forms{{0, -1, 0}, {0, -1, 1}, {2, -1, 0}, {2, 1, 0}, {2, 1, 1},
                                         {12, 1, 0}, {12, 1, 1}, {-10, -1, 0}, {4, 1, 0}};
  return forms;
}

void check_modularity(const SuiteOptions& o, CheckReport& rep) {
  const double step = o.policy.fd_step_s;
  auto pts = sample_points(o.seed, 5);
  double worst = 0.0;
  for (const auto& id : modularity_forms()) {
    Expansion e = expansion(id.k, id.m, id.r, o.policy);
    double form_worst = 0.0;
    for (EvalPoint z : pts) {
      cplx fz = expansion_eval(*e, z, step);
      cplx fs = expansion_eval(*e, EvalPoint(-1.0 / z.z()), step);
      double res = std::abs(fs - std::pow(z.z(), id.k) * fz) / (1.0 + std::abs(fz));
      form_worst = std::max(form_worst, res);
    }
    rep.diagnostics[label(id.k <= 0 ? 'F' : 'G', id.k, id.m, id.r)] = fmt(form_worst);
    worst = std::max(worst, form_worst);
  }
  rep.inputs["points"] = "5";
  rep.residual = worst;
  rep.tolerance = 1e-4;
}

void check_f0_j(const SuiteOptions& o, CheckReport& rep) {
  Expansion e = expansion(0, -1, 0, o.policy);
  double worst = 0.0;
  for (EvalPoint z : sample_points(o.seed, 5)) {
    cplx v = expansion_eval(*e, z, o.policy.fd_step_s);
    cplx ref = closed_form_eval(ClosedForm::F0_neg1_0, 1, z, 80);
    worst = std::max(worst, std::abs(v - ref) / (1.0 + std::abs(ref)));
  }
  rep.inputs["identity"] = "F(0,-1,0) = j - 720";
  rep.residual = worst;
  rep.tolerance = o.policy.target_tol;
}

void check_half_depth(const SuiteOptions& o, CheckReport& rep) {
  double worst = 0.0;
  for (auto [k, m, r] : {std::tuple{2, -1L, 0}, std::tuple{2, -1L, 1}, std::tuple{12, 1L, 0}, std::tuple{12, 1L, 1},
                         std::tuple{4, -1L, 1}}) {
    double d = depth_classify(*expansion(k, m, r, o.policy));
    rep.diagnostics[label('G', k, m, r)] = fmt(d);
    worst = std::max(worst, std::abs(d - (r + 0.5)));
  }
  rep.residual = worst;
  rep.tolerance = 0.0;
}

cplx basis_value(int k, int m, EvalPoint z) {
  BasisElement f = duke_jenkins(k, m, 60);
  return f.expansion.evaluate(z.q());
}

void check_tilde_f(const SuiteOptions& o, CheckReport& rep) {
  FourierWhittakerExpansion t = tilde_combination(TildeKind::F, -10, -2, 1, o.policy);
  const double fact = std::tgamma(12.0);  // (1-k)!
  double worst = 0.0;
  for (EvalPoint z : recursion_points()) {
    cplx lhs = expansion_eval(t, z, o.policy.fd_step_s);
    cplx rhs = fact * basis_value(-10, 2, z);
    worst = std::max(worst, rel(lhs, rhs, std::abs(rhs)));
  }
  rep.inputs["identity"] = "tildeF(-10,-2,0) = 11! f(-10,2)";
  rep.residual = worst;
  rep.tolerance = 1e-4;
}

void check_tilde_g(const SuiteOptions& o, CheckReport& rep) {
  FourierWhittakerExpansion t = xi_on_expansion(tilde_combination(TildeKind::G, 12, 2, 1, o.policy));
  const double c = std::pow(4 * M_PI, -11) * std::tgamma(12.0);
  double worst = 0.0;
  for (EvalPoint z : recursion_points()) {
    cplx lhs = expansion_eval(t, z, o.policy.fd_step_s);
    cplx rhs = c * basis_value(-10, 2, z);
    worst = std::max(worst, rel(lhs, rhs, std::abs(rhs)));
  }
  rep.inputs["identity"] = "xi_12 tildeG(12,2,1) = (4pi)^-11 11! f(-10,2)";
  rep.residual = worst;
  rep.tolerance = 1e-4;
}

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> reg = [] {
    std::map<std::string, CheckFn> r;
    r["golden_coefficients"] = check_golden;
    r["duality"] = check_duality;
    for (long m = 1; m <= 5; ++m) r["ramanujan_m" + std::to_string(m)] = check_ramanujan(m);
    r["beta_delta.constancy"] = check_beta_constancy;
    r["beta_delta.value"] = check_beta_value;
    r["g2_jprime"] = check_g2_jprime;
    r["cusp_k4"] = check_cusp_k4;
    r["whittaker.ode"] = check_whittaker_ode;
    r["whittaker.wronskian"] = check_whittaker_wronskian;
    r["whittaker.mmw"] = check_whittaker_mmw;
    r["whittaker.closed_forms"] = check_whittaker_closed;
    r["xi_table.F0_m1_0"] = check_xi_table(0, -1, 0);
    r["xi_table.G2_m1_0"] = check_xi_table(2, -1, 0);
    r["recursion.xi_F0_m1_1"] = check_recursion_f0;
    r["recursion.G2_1_0_vanishes"] = check_recursion_g210;
    r["recursion.table_F0_m1_1"] = check_recursion_table(0, -1, 1);
    r["recursion.table_G2_1_1"] = check_recursion_table(2, 1, 1);
    r["recursion.table_Fm10_m1_0"] = check_recursion_table(-10, -1, 0);
    r["recursion.table_G12_1_0"] = check_recursion_table(12, 1, 0);
    r["maass_sequence"] = check_recursion_table(12, 1, 1);
    r["laplacian.recursion"] = check_laplacian_recursion;
    r["laplacian.table"] = check_laplacian_table;
    r["kronecker_limit"] = check_kronecker;
    r["direct_vs_fourier"] = check_direct_vs_fourier;
    r["modularity"] = check_modularity;
    r["f0_m1_0_j"] = check_f0_j;
    r["half_depth"] = check_half_depth;
    r["tilde.F"] = check_tilde_f;
    r["tilde.G"] = check_tilde_g;
    return r;
  }();
  return reg;
}

void echo_policy(const SuiteOptions& o, CheckReport& rep) {
  rep.inputs["c_max"] = std::to_string(o.policy.c_max);
  rep.inputs["n_max"] = std::to_string(o.policy.n_max);
  rep.inputs["fd_step_s"] = fmt(o.policy.fd_step_s);
  rep.inputs["fd_step_z"] = fmt(o.policy.fd_step_z);
  rep.inputs["target_tol"] = fmt(o.policy.target_tol);
  rep.inputs["seed"] = std::to_string(o.seed);
}

CheckReport adhoc(const std::string& id, const SuiteOptions& o, const CheckFn& fn) {
  o.policy.validate();
  CheckReport rep;
  rep.check_id = id;
  echo_policy(o, rep);
  auto t0 = Clock::now();
  try {
    fn(o, rep);
  } catch (const std::exception& ex) {
    rep.residual = std::numeric_limits<double>::infinity();
    rep.diagnostics["error"] = ex.what();
  }
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  rep.passed = rep.residual <= rep.tolerance;
  return rep;
}

}  // namespace

CheckReport check_xi_at(int k, long m, int r, EvalPoint z, const SuiteOptions& options) {
  return adhoc("xi", options, [=](const SuiteOptions& o, CheckReport& rep) {
    Expansion e = expansion(k, m, r, o.policy);
    SampledForm f = sampled(e, o.policy.fd_step_s);
    cplx num = xi_numeric(f, z, kXiStep * z.y);
    cplx tab = expansion_eval(xi_on_expansion(*e), z, o.policy.fd_step_s);
    rep.inputs["form"] = label(k <= 0 ? 'F' : 'G', k, m, r);
    rep.inputs["z"] = fmt(z.z());
    rep.diagnostics["numeric"] = fmt(num);
    rep.diagnostics["table"] = fmt(tab);
    rep.residual = rel(num, tab, xi_scale(tab, f, z, kXiStep * z.y));
    rep.tolerance = 1e-5;
  });
}

CheckReport check_laplacian_at(int k, long m, int r, EvalPoint z, const SuiteOptions& options) {
  return adhoc("laplacian", options, [=](const SuiteOptions& o, CheckReport& rep) {
    Expansion e = expansion(k, m, r, o.policy);
    SampledForm f = sampled(e, o.policy.fd_step_s);
    cplx num = laplacian_numeric(f, z, kLaplaceStepExpansion * z.y);
    cplx tab = expansion_eval(laplacian_on_expansion(*e), z, o.policy.fd_step_s);
    double scale = std::max(std::abs(tab), 4 * M_PI * M_PI * z.y * z.y * std::abs(f.evaluator(z)));
    rep.inputs["form"] = label(k <= 0 ? 'F' : 'G', k, m, r);
    rep.inputs["z"] = fmt(z.z());
    rep.diagnostics["numeric"] = fmt(num);
    rep.diagnostics["table"] = fmt(tab);
    rep.residual = rel(num, tab, scale);
    rep.tolerance = 1e-4;
  });
}

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& selection, const SuiteOptions& options) {
  options.policy.validate();
  const auto& reg = registry();
  std::vector<std::string> chosen;
  for (const auto& s : selection) {
    if (s == "all") {
      for (const auto& [id, fn] : reg) chosen.push_back(id);
      continue;
    }
    if (!s.empty() && s.back() == '*') {
      std::string prefix = s.substr(0, s.size() - 1);
      bool any = false;
      for (const auto& [id, fn] : reg)
        if (id.compare(0, prefix.size(), prefix) == 0) {
          chosen.push_back(id);
          any = true;
        }
      if (any) continue;
    } else if (reg.count(s)) {
      chosen.push_back(s);
      continue;
    }
    std::string valid;
    for (const auto& [id, fn] : reg) valid += (valid.empty() ? "" : ", ") + id;
    throw Error("unknown check id '" + s + "'; valid ids: " + valid);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  std::vector<CheckReport> out;
  for (const auto& id : chosen) {
    out.push_back(adhoc(id, options, reg.at(id)));
  }
  return out;
}

std::vector<EvalPoint> sample_points(std::uint32_t seed, int count) {
  std::mt19937 gen(seed);
  auto unit = [&] { return static_cast<double>(gen()) / 4294967296.0; };
  std::vector<EvalPoint> out;
  for (int i = 0; i < count; ++i) {
    double x = unit() - 0.5;
    double y = 0.55 + 0.95 * unit();
    out.emplace_back(x, y);
  }
  return out;
}

std::string reports_to_json(const std::vector<CheckReport>& reports, bool timings, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["inputs"] = r.inputs;
    j["residual"] = std::isfinite(r.residual) ? nlohmann::ordered_json(r.residual) : nlohmann::ordered_json(nullptr);
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    if (timings) j["runtime_ms"] = r.runtime_ms;
    j["diagnostics"] = r.diagnostics;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
  std::vector<CheckReport> out;
  try {
    auto arr = nlohmann::json::parse(text);
    for (const auto& j : arr) {
      CheckReport r;
      r.check_id = j.at("check_id").get<std::string>();
      r.inputs = j.value("inputs", std::map<std::string, std::string>{});
      r.residual = j.at("residual").is_null() ? std::numeric_limits<double>::infinity() : j.at("residual").get<double>();
      r.tolerance = j.at("tolerance").get<double>();
      r.passed = j.at("passed").get<bool>();
      r.runtime_ms = j.value("runtime_ms", 0L);
      r.diagnostics = j.value("diagnostics", std::map<std::string, std::string>{});
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("invalid report JSON: ") + ex.what());
  }
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "check_id,residual,tolerance,passed,runtime_ms\n";
  for (const auto& r : reports)
    os << r.check_id << ',' << fmt(r.residual) << ',' << fmt(r.tolerance) << ',' << (r.passed ? "true" : "false") << ','
       << r.runtime_ms << '\n';
  return os.str();
}

std::string reports_to_text(const std::vector<CheckReport>& reports, bool timings) {
  std::ostringstream os;
  for (const auto& r : reports) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-26s residual %-12.4g tol %-10.3g", r.passed ? "PASS" : "FAIL",
                  r.check_id.c_str(), r.residual, r.tolerance);
    os << line;
    if (timings) os << ' ' << r.runtime_ms << " ms";
    auto err = r.diagnostics.find("error");
    if (err != r.diagnostics.end()) os << "  error: " << err->second;
    os << '\n';
  }
  return os.str();
}

}  // namespace polymaass
