#include "polymaass/modforms.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "polymaass/special.hpp"

namespace polymaass {

namespace {

// Pentagonal number theorem: prod (1 - q^n) known through q^N.
QSeries euler_product(int N) {
  std::vector<Rational> c(static_cast<size_t>(N + 1));
  for (int k = 0;; ++k) {
    bool any = false;
    for (int sgn : {1, -1}) {
      if (k == 0 && sgn == -1) continue;
      long kk = static_cast<long>(sgn) * k;
      long e = kk * (3 * kk - 1) / 2;
      if (e <= N) {
        c[static_cast<size_t>(e)] += (k % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  return QSeries(0, std::move(c), N);
}

// Memo of the longest series computed so far per key.
class SeriesMemo {
 public:
  template <typename Build>
  QSeries get(int key, int N, Build build) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end() && it->second.known_through() >= N) return it->second.truncated(N);
    }
    // Builders may consult the memo themselves, so build unlocked.
    QSeries fresh = build(N);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it == memo_.end() || it->second.known_through() < N) it = memo_.insert_or_assign(key, fresh).first;
    return it->second.truncated(N);
  }

 private:
  std::mutex mu_;
  std::map<int, QSeries> memo_;
};

SeriesMemo& memo() {
  static SeriesMemo m;
  return m;
}

EvalPoint reduce_to_fundamental_domain(EvalPoint p) {
  cplx z = p.z();
  for (int iter = 0; iter < 1000; ++iter) {
    z -= std::round(z.real());
    if (std::norm(z) >= 1.0) break;
    z = -1.0 / z;
  }
  return EvalPoint(z);
}

}  // namespace

WeightProfile ell_index(int k) {
  if (k % 2 != 0) throw Error("weight must be even, got " + std::to_string(k));
  int r = ((k % 12) + 12) % 12;
  int kp = (r == 2) ? 14 : r;
  return {k, (k - kp) / 12, kp};
}

mpz_class divisor_sigma(long n, unsigned power) {
  if (n <= 0) throw Error("divisor_sigma requires n >= 1");
  mpz_class acc = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), power);
    acc += t;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), power);
      acc += t;
    }
  }
  return acc;
}

QSeries delta_qexp(int N) {
  if (N < 1) throw Error("delta_qexp requires N >= 1");
  return memo().get(-1, N, [](int n) {
    QSeries p = euler_product(n - 1).pow(24);
    return QSeries::monomial(1, 1, n + 1) * p;
  });
}

QSeries eisenstein_qexp(int k, int N) {
  if (k < 4 || k % 2) throw Error("eisenstein_qexp requires even k >= 4, got " + std::to_string(k));
  return memo().get(1000 + k, N, [k](int n) {
    Rational factor = Rational(-2 * k) / bernoulli(k);
    std::vector<Rational> c(static_cast<size_t>(n + 1));
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
      c[static_cast<size_t>(i)] = factor * Rational(divisor_sigma(i, static_cast<unsigned>(k - 1)));
    return QSeries(0, std::move(c), n);
  });
}

QSeries e2star_qpart(int N) {
  if (N < 1) throw Error("e2star_qpart requires N >= 1");
  std::vector<Rational> c(static_cast<size_t>(N + 1));
  for (int i = 1; i <= N; ++i) c[static_cast<size_t>(i)] = Rational(divisor_sigma(i));
  return QSeries(0, std::move(c), N);
}

QSeries j_qexp(int N) {
  return memo().get(-2, N, [](int n) {
    QSeries e4 = eisenstein_qexp(4, n + 1);
    return (e4 * e4 * e4 * delta_qexp(n + 2).inverse()).truncated(n);
  });
}

QSeries faber_poly(int m, int N) {
  if (m > 0) throw Error("faber_poly requires m <= 0");
  int M = -m;
  if (M == 0) return QSeries::one(N);
  int P = N + M + 2;
  QSeries j = j_qexp(P);
  std::vector<QSeries> faber{QSeries::one(P)};  // faber[i] = j_{-i}
  QSeries jpow = QSeries::one(P);
  for (int i = 1; i <= M; ++i) {
    jpow = jpow * j;
    QSeries f = jpow;
    for (int e = -i + 1; e <= 0; ++e) {
      Rational c = f.coeff(e);
      if (c != 0) f = f - c * faber[static_cast<size_t>(-e)];
    }
    faber.push_back(f);
  }
  QSeries out = faber.back();
  if (out.known_through() < N) throw Error("internal: faber_poly lost precision");
  return out.truncated(N);
}

BasisElement duke_jenkins(int k, int m, int N) {
  WeightProfile w = ell_index(k);
  if (m < -w.ell)
    throw Error("no such basis element: f_{" + std::to_string(k) + "," + std::to_string(m) +
                "} requires m >= " + std::to_string(-w.ell));

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<QSeries>> cache;  // (k, N) -> f_{k,-ell..}
  std::lock_guard<std::mutex> lock(mu);
  auto& row = cache[{k, N}];
  if (!row.empty() && static_cast<int>(row.size()) > m + w.ell) {
    return {k, m, row[static_cast<size_t>(m + w.ell)]};
  }

  int steps = m + w.ell;
  int P = N + steps + 2 * std::abs(w.ell) + 4;
  QSeries fk = (w.k_prime == 0) ? QSeries::one(P) : eisenstein_qexp(w.k_prime, P);
  if (w.ell != 0) fk = fk * delta_qexp(P + 2).truncated(P + 2).pow(w.ell);
  QSeries j = j_qexp(P);

  std::vector<QSeries> f{fk};
  for (int mm = -w.ell + 1; mm <= m; ++mm) {
    QSeries g = f.back() * j;
    for (int e = -mm + 1; e <= w.ell; ++e) {
      Rational c = g.coeff(e);
      if (c != 0) g = g - c * f[static_cast<size_t>(-e + w.ell)];
    }
    f.push_back(g);
  }
  row.clear();
  for (auto& s : f) {
    if (s.known_through() < N) throw Error("internal: duke_jenkins lost precision");
    row.push_back(s.truncated(N));
  }
  return {k, m, row.back()};
}

ClosedForm closed_form_from_name(const std::string& name) {
  if (name == "F01") return ClosedForm::F01;
  if (name == "G21") return ClosedForm::G21;
  if (name == "Gk0") return ClosedForm::Gk0;
  if (name == "F0_neg_m_0") return ClosedForm::F0_neg_m_0;
  if (name == "F0_neg1_0") return ClosedForm::F0_neg1_0;
  throw Error("unknown closed form '" + name + "' (expected F01, G21, Gk0, F0_neg_m_0, F0_neg1_0)");
}

const char* closed_form_name(ClosedForm f) {
  switch (f) {
    case ClosedForm::F01: return "F01";
    case ClosedForm::G21: return "G21";
    case ClosedForm::Gk0: return "Gk0";
    case ClosedForm::F0_neg_m_0: return "F0_neg_m_0";
    case ClosedForm::F0_neg1_0: return "F0_neg1_0";
  }
  return "?";
}

double log_abs_eta(EvalPoint z, int N) {
  cplx q = z.q();
  double acc = -M_PI * z.y / 12.0;
  cplx qn = 1.0;
  for (int n = 1; n <= N; ++n) {
    qn *= q;
    acc += std::log(std::abs(1.0 - qn));
  }
  return acc;
}

cplx closed_form_eval(ClosedForm form, int param, EvalPoint z, int N) {
  switch (form) {
    case ClosedForm::F01: {
      EvalPoint w = reduce_to_fundamental_domain(z);
      return kEulerGamma + 1.0 - std::log(4 * M_PI) - std::log(w.y) - 4.0 * log_abs_eta(w, N);
    }
    case ClosedForm::G21:
      return M_PI / 3 - 1.0 / z.y - 8 * M_PI * e2star_qpart(N).evaluate(z.q());
    case ClosedForm::Gk0: {
      int k = param;
      double pref = (k / 2.0 - 1) * std::tgamma(k + 1.0) * std::pow(M_PI, -k / 2.0) * zeta_even(k);
      return pref * eisenstein_qexp(k, N).evaluate(z.q());
    }
    case ClosedForm::F0_neg_m_0: {
      if (param < 1) throw Error("F0_neg_m_0 requires m >= 1");
      EvalPoint w = reduce_to_fundamental_domain(z);
      return faber_poly(-param, N).evaluate(w.q()) + 24.0 * divisor_sigma(param).get_d();
    }
    case ClosedForm::F0_neg1_0: {
      EvalPoint w = reduce_to_fundamental_domain(z);
      return j_qexp(N).evaluate(w.q()) - 720.0;
    }
  }
  throw Error("unknown closed form");
}

cplx EvalPoint::q() const { return std::exp(cplx(0, 2 * M_PI) * z()); }

void TruncationPolicy::validate() const {
  if (c_max < 1 || n_max < 0 || !(fd_step_s > 0) || !(fd_step_z > 0) || !(target_tol > 0))
    throw Error("truncation policy fields must be positive");
}

}  // namespace polymaass
