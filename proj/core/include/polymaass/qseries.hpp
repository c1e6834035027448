#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polymaass {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formal Laurent series in q with exact rational coefficients, valid modulo
// q^(known_through + 1).
class QSeries {
 public:
  // The zero series, known through the given order.
  explicit QSeries(int known_through = 0);
  QSeries(int leading_exponent, std::vector<Rational> coeffs, int known_through);

  static QSeries monomial(const Rational& c, int exponent, int known_through);
  static QSeries one(int known_through) { return monomial(1, 0, known_through); }

  bool is_zero() const { return coeffs_.empty(); }
  int leading_exponent() const { return leading_; }
  int known_through() const { return known_through_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Exact coefficient of q^n; throws past known_through.
  Rational coeff(int n) const;

  QSeries truncated(int order) const;
  QSeries inverse() const;
  QSeries qderiv() const;
  QSeries pow(int e) const;

  std::complex<double> evaluate(std::complex<double> q) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);
  QSeries operator-() const;

  bool operator==(const QSeries& other) const;

 private:
  void normalize();

  int leading_ = 0;
  std::vector<Rational> coeffs_;
  int known_through_ = 0;
};

inline QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries qs_inv(const QSeries& a) { return a.inverse(); }
inline QSeries qs_qderiv(const QSeries& a) { return a.qderiv(); }
inline Rational qs_coeff(const QSeries& a, int n) { return a.coeff(n); }

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(int n);

}  // namespace polymaass
