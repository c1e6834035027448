#include "polymaass/qseries.hpp"

#include <algorithm>
#include <climits>
#include <mutex>

namespace polymaass {

QSeries::QSeries(int known_through) : known_through_(known_through) {}

QSeries::QSeries(int leading_exponent, std::vector<Rational> coeffs, int known_through)
    : leading_(leading_exponent), coeffs_(std::move(coeffs)), known_through_(known_through) {
  normalize();
}

QSeries QSeries::monomial(const Rational& c, int exponent, int known_through) {
  return QSeries(exponent, {c}, known_through);
}

void QSeries::normalize() {
  size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    leading_ = 0;
    return;
  }
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
    leading_ += static_cast<int>(first);
  }
  long keep = static_cast<long>(known_through_) - leading_ + 1;
  if (keep <= 0) {
    coeffs_.clear();
    leading_ = 0;
    return;
  }
  if (static_cast<long>(coeffs_.size()) > keep) coeffs_.resize(static_cast<size_t>(keep));
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QSeries::coeff(int n) const {
  if (n > known_through_)
    throw Error("beyond truncation: q^" + std::to_string(n) + " requested, series known through q^" +
                std::to_string(known_through_));
  if (is_zero() || n < leading_) return 0;
  size_t i = static_cast<size_t>(n - leading_);
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

QSeries QSeries::truncated(int order) const {
  QSeries r = *this;
  r.known_through_ = std::min(order, known_through_);
  r.normalize();
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  int kt = std::min(a.known_through_, b.known_through_);
  if (a.is_zero()) return b.truncated(kt);
  if (b.is_zero()) return a.truncated(kt);
  int lo = std::min(a.leading_, b.leading_);
  int hi = std::max(a.leading_ + static_cast<int>(a.coeffs_.size()),
                    b.leading_ + static_cast<int>(b.coeffs_.size()));
  hi = std::min(hi, kt + 1);
  if (hi <= lo) return QSeries(kt);
  std::vector<Rational> c(static_cast<size_t>(hi - lo));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    int e = a.leading_ + static_cast<int>(i);
    if (e < hi) c[static_cast<size_t>(e - lo)] += a.coeffs_[i];
  }
  for (size_t i = 0; i < b.coeffs_.size(); ++i) {
    int e = b.leading_ + static_cast<int>(i);
    if (e < hi) c[static_cast<size_t>(e - lo)] += b.coeffs_[i];
  }
  return QSeries(lo, std::move(c), kt);
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const Rational& c, const QSeries& a) {
  if (c == 0) return QSeries(a.known_through_);
  QSeries r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  // A zero operand carries no leading exponent; it only limits validity
  // through its own known_through shifted by the other operand.
  if (a.is_zero() && b.is_zero()) return QSeries(a.known_through_ + b.known_through_);
  if (a.is_zero()) return QSeries(a.known_through_ + b.leading_);
  if (b.is_zero()) return QSeries(b.known_through_ + a.leading_);
  int kt = std::min(a.known_through_ + b.leading_, b.known_through_ + a.leading_);
  int lead = a.leading_ + b.leading_;
  if (kt < lead) return QSeries(kt);
  size_t len = static_cast<size_t>(kt - lead + 1);
  std::vector<Rational> c(len);
  for (size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QSeries(lead, std::move(c), kt);
}

QSeries QSeries::inverse() const {
  if (is_zero()) throw Error("division by zero series");
  int v = leading_;
  int kt = known_through_ - 2 * v;
  int rel = known_through_ - v;  // relative precision of the unit part
  std::vector<Rational> inv(static_cast<size_t>(rel + 1));
  Rational a0inv = 1 / coeffs_[0];
  inv[0] = a0inv;
  for (int n = 1; n <= rel; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n && i < static_cast<int>(coeffs_.size()); ++i)
      acc += coeffs_[static_cast<size_t>(i)] * inv[static_cast<size_t>(n - i)];
    inv[static_cast<size_t>(n)] = -acc * a0inv;
  }
  return QSeries(-v, std::move(inv), kt);
}

QSeries QSeries::qderiv() const {
  QSeries r = *this;
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] *= (leading_ + static_cast<int>(i));
  r.normalize();
  return r;
}

QSeries QSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QSeries result = one(INT_MAX / 4);
  QSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  if (result.known_through_ == INT_MAX / 4) result = result.truncated(known_through_);
  return result;
}

std::complex<double> QSeries::evaluate(std::complex<double> q) const {
  std::complex<double> acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + coeffs_[i].get_d();
  return acc * std::pow(q, leading_);
}

bool QSeries::operator==(const QSeries& o) const {
  return known_through_ == o.known_through_ && leading_ == o.leading_ && coeffs_ == o.coeffs_;
}

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw Error("bernoulli index must be nonnegative");
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{k=0}^{m} C(m+1,k) B_k = 0
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    mpz_class binom = 1;
    Rational acc = 0;
    for (int k = 0; k < m; ++k) {
      acc += Rational(binom) * memo[static_cast<size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    memo.push_back(-acc / Rational(m + 1));
  }
  return memo[static_cast<size_t>(n)];
}

}  // namespace polymaass
