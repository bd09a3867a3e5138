#pragma once
// Kummer confluent hypergeometric function M(alpha,gamma,z) and Laguerre
// polynomials.  The terminating (polynomial) Kummer case is also available
// with exact rational coefficients, which the oscillator states are built on.

#include "psqm/rational.hpp"

#include <cmath>
#include <vector>

namespace psqm {

inline bool is_nonpositive_int(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// F(alpha, gamma, z) = sum_k (alpha)_k / (gamma)_k z^k / k!
inline double kummer_m(double alpha, double gamma, double z) {
  if (is_nonpositive_int(alpha)) {
    int n = static_cast<int>(-alpha);
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < n; ++k) {
      term *= (alpha + k) / (gamma + k) * z / (k + 1);
      sum += term;
    }
    return sum;
  }
  if (is_nonpositive_int(gamma))
    throw std::domain_error(
        "kummer_m: gamma nonpositive integer with non-terminating alpha");
  double sum = 1.0, term = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= (alpha + k) / (gamma + k) * z / (k + 1);
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
  }
  throw std::runtime_error("kummer_m: term cap exceeded");
}

// Exact coefficients of the terminating series F(-n, gamma, c*t) as a
// polynomial in t (degree n).
inline std::vector<Rat> kummer_poly_coeffs(int n, const Rat& gamma,
                                           const Rat& c) {
  std::vector<Rat> a(n + 1);
  a[0] = 1;
  for (int k = 0; k < n; ++k)
    a[k + 1] = a[k] * Rat(-(n - k)) / (gamma + k) * c / Rat(k + 1);
  return a;
}

// L_n(x) by the stable three-term recurrence
// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}
inline double laguerre(int n, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  if (n == 0) return 1.0;
  double lm = 1.0, l = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    double ln = ((2 * k + 1 - x) * l - k * lm) / (k + 1);
    lm = l;
    l = ln;
  }
  return l;
}

}  // namespace psqm
