#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "polymaass/qseries.hpp"

namespace polymaass {

// Derivatives f^(j)(s0), j = 0..max_order, from central differences with two
// Richardson levels. Order j uses base step h * 5^(j-1).
template <typename T, typename F>
std::vector<T> fd_derivatives(F&& f, double s0, int max_order, double h) {
  std::map<double, T> cache;
  auto eval = [&](double s) -> T {
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    T v = f(s);
    cache.emplace(s, v);
    return v;
  };

  std::vector<T> out(static_cast<size_t>(max_order + 1));
  out[0] = eval(s0);
  for (int j = 1; j <= max_order; ++j) {
    double hj = h * std::pow(5.0, j - 1);
    auto diff = [&](double step) -> T {
      if (s0 + step * 0.25 == s0) throw Error("finite-difference step underflow");
      T acc = T(0);
      double binom = 1.0;
      for (int i = 0; i <= j; ++i) {
        double sign = (i % 2) ? -1.0 : 1.0;
        acc += sign * binom * eval(s0 + (0.5 * j - i) * step);
        binom = binom * (j - i) / (i + 1);
      }
      return acc / std::pow(step, j);
    };
    T d0 = diff(hj), d1 = diff(hj / 2), d2 = diff(hj / 4);
    T r1 = (4.0 * d1 - d0) / 3.0;
    T r2 = (4.0 * d2 - d1) / 3.0;
    out[static_cast<size_t>(j)] = (16.0 * r2 - r1) / 15.0;
  }
  return out;
}

}  // namespace polymaass
