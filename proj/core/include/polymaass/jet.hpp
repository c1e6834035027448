#pragma once

#include <vector>

#include "polymaass/point.hpp"

namespace polymaass {

// Truncated power series sum_i c_i eps^i with 0 <= i <= order.
class Jet {
 public:
  explicit Jet(int order, cplx constant = 0.0);

  static Jet linear(int order, cplx c0, cplx c1);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  cplx operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  cplx& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  Jet& operator+=(const Jet& o);
  Jet& operator*=(cplx a);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(cplx a, Jet b) { return b *= a; }

  Jet reciprocal() const;

 private:
  std::vector<cplx> c_;
};

Jet jet_exp(const Jet& g);

// Jets of Gamma(x0 + slope*eps) and 1/Gamma(x0 + slope*eps) for integer x0.
// The reciprocal is entire, so x0 <= 0 yields a jet with zero constant term.
Jet jet_gamma(int x0, double slope, int order);
Jet jet_rgamma(int x0, double slope, int order);

}  // namespace polymaass
