#pragma once
// Numerical star products on grid fields.
//  - star_apply_poly: exact finite Bopp expansion of a polynomial symbol,
//    evaluated with spectral derivatives (the only error is spectral).
//  - star_series: truncated Moyal/deformed series
//      sum_{k=0}^{K} (1/k!) (i/2)^k B_k(f,g)
//    expanded multinomially over the elementary bidifferential pairs.
// The two backends are deliberately independent so each can serve as the
// other's oracle.

#include "psqm/bopp.hpp"
#include "psqm/phase_grid.hpp"

namespace psqm {

struct StarReport {
  int K = 0;
  bool converged = false;
  double last_term_rel = 0.0;  // max-norm of the last order / max-norm of sum
};

Field star_apply_poly(const PolynomialSymbol& a, const Field& psi,
                      const NCParams& nc);

// Plain truncated series.  With accel=true the same terms are combined by
// iterated averaging of partial sums (Euler summation), which extracts the
// Abel limit when the raw series sits on its convergence boundary; the raw
// truncated sum is the default.
Field star_series(const Field& f, const Field& g, int K, const NCParams& nc,
                  StarReport* report = nullptr, bool accel = false,
                  int k_cap = 24);

// Exposed for the theta = 0 reduction test: run the series over an explicit
// pair list.
Field star_series_pairs(const Field& f, const Field& g, int K,
                        const std::vector<BidiffPair>& pairs,
                        StarReport* report = nullptr, bool accel = false);

}  // namespace psqm
