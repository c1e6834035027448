#pragma once

#include <complex>

#include "polymaass/qseries.hpp"

namespace polymaass {

using cplx = std::complex<double>;

struct EvalPoint {
  double x = 0.0;
  double y = 1.0;

  EvalPoint() = default;
  EvalPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y_ > 0.0)) throw Error("EvalPoint requires y > 0");
  }
  explicit EvalPoint(cplx z) : EvalPoint(z.real(), z.imag()) {}

  cplx z() const { return {x, y}; }
  cplx q() const;  // e^{2 pi i z}
};

// Cutoffs for every numerical series and stencil.
struct TruncationPolicy {
  long c_max = 10000;
  int n_max = 30;
  double fd_step_s = 1e-3;
  double fd_step_z = 1e-4;
  double target_tol = 1e-6;

  void validate() const;
};

}  // namespace polymaass
