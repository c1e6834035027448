#pragma once

#include "polymaass/point.hpp"

namespace polymaass {

struct PoincareSpec {
  int k = 0;
  long m = 1;
  int r = 0;
  cplx s = 1.0;
};

// (4 pi y)^{-k/2} M_{sgn(m)k/2, s-1/2}(4 pi |m| y) e^{2 pi i m x}
cplx phi_eval(int k, long m, EvalPoint z, cplx s);

struct DirectSum {
  cplx value;
  double tail_estimate;  // |S(R) - S(R/2)|, a crude size of the discarded cosets
  long cosets;
};

// Sum over coprime (c, d) with c >= 1 and |cz + d| <= R, plus the identity.
DirectSum poincare_direct_sum(const PoincareSpec& spec, EvalPoint z, double R);
cplx poincare_direct(const PoincareSpec& spec, EvalPoint z, const TruncationPolicy& policy);
// Radius used by poincare_direct for a given policy.
double direct_sum_radius(const TruncationPolicy& policy);

struct FourierTerm {
  cplx value;          // the e^{2 pi i n x} coefficient at height y
  double size;         // same with every Kloosterman-Bessel term in absolute value
  double tail_estimate;
};

FourierTerm poincare_fourier_term(const PoincareSpec& spec, long n, double y, const TruncationPolicy& policy);
cplx poincare_fourier(const PoincareSpec& spec, EvalPoint z, const TruncationPolicy& policy);

struct LatticeSum {
  cplx value;
  double tail_estimate;
};

// E_k(z, s) summed over max(|m|, |n|) <= B.
LatticeSum eisenstein_lattice_sum(int k, EvalPoint z, cplx s, long B);
cplx eisenstein_lattice(int k, EvalPoint z, cplx s, const TruncationPolicy& policy);
long lattice_bound(const TruncationPolicy& policy);
cplx complete_eisenstein(int k, EvalPoint z, cplx s, const TruncationPolicy& policy);

}  // namespace polymaass
