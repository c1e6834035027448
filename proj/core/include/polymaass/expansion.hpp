#pragma once

#include <map>
#include <set>
#include <utility>

#include "polymaass/poincare.hpp"

namespace polymaass {

// Coefficient table of sum c^{-}_{n,j} u^{[j],-}_{k,n}(y) e(nx) + c^{+}_{n,j} u^{[j],+}_{k,n}(y) e(nx).
struct FourierWhittakerExpansion {
  using Key = std::pair<long, int>;  // (n, j)

  int k = 0;
  int r = 1;  // every stored j satisfies j <= r - 1
  long n_min = 0;
  long n_max = 0;
  std::map<Key, cplx> cminus;
  std::map<Key, cplx> cplus;
  std::set<long> exact_plus_support;

  bool empty() const { return cminus.empty() && cplus.empty(); }
  double max_abs() const;
  void refresh_support();
};

// F_{k,m,r} (k <= 0, s = 1 - k/2) or G_{k,m,r} (k >= 2, s = k/2); spec.s is ignored.
FourierWhittakerExpansion taylor_expansion(const PoincareSpec& spec, const TruncationPolicy& policy);

cplx expansion_eval(const FourierWhittakerExpansion& e, EvalPoint z, double fd_step_s = 1e-3);

// acc += c * e. Weights must match.
void accumulate(FourierWhittakerExpansion& acc, const FourierWhittakerExpansion& e, cplx c);

enum class TildeKind { F, G };

// F: |m|^{-k/2} F_{k,m,r-1} + sum_{l_k < n < 0} a_k(-m,n) |n|^{-k/2} F_{k,n,r-1}, m <= l_k.
// G: m^{k/2-1} G_{k,m,r} - sum_{0 < n <= l_k} a_k(-n,m) n^{k/2-1} G_{k,n,r}, m > l_k.
FourierWhittakerExpansion tilde_combination(TildeKind kind, int k, long m, int r, const TruncationPolicy& policy);

}  // namespace polymaass
