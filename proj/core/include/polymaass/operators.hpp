#pragma once

#include <functional>

#include "polymaass/expansion.hpp"

namespace polymaass {

struct SampledForm {
  int k = 0;
  std::function<cplx(EvalPoint)> evaluator;
};

// xi_k = 2i y^k conj(d/dzbar), fourth-order central differences with step h.
cplx xi_numeric(const SampledForm& f, EvalPoint z, double h);
// Delta_k = -y^2 (d_xx + d_yy) + iky (d_x + i d_y), five-point stencils with step h.
cplx laplacian_numeric(const SampledForm& f, EvalPoint z, double h);

FourierWhittakerExpansion xi_on_expansion(const FourierWhittakerExpansion& e);
FourierWhittakerExpansion laplacian_on_expansion(const FourierWhittakerExpansion& e);

// Each |c| is weighted by |u^{[0],+-}_{k,n}(1)|; entries below
// rel_tol times the largest weighted entry count as zero. Returns r or r - 1/2.
double depth_classify(const FourierWhittakerExpansion& e, double rel_tol = 1e-6);

}  // namespace polymaass
