#pragma once
// Radial eigenproblem for the 3D oscillator in phase space:
//   r chi'' + (3 - r) chi' + lambda chi = 0,   lambda = E - 3/2,
// in self-adjoint Sturm-Liouville form
//   -(r^3 e^{-r} chi')' = lambda r^2 e^{-r} chi
// discretized with a cell-centered finite-volume scheme and solved by
// Sturm-sequence bisection on the symmetrized tridiagonal matrix.

#include <vector>

namespace psqm {

struct RadialResult {
  std::vector<double> energies;  // Richardson-extrapolated, ascending
  double max_drift = 0;          // residual change in the last extrapolation
  bool converged = true;         // max_drift <= 1e-6
  double r_max = 0;
  int grid_n = 0;
};

// Single-level solve: eigenvalues lambda <= e_max - 3/2 returned as energies
// E = lambda + 3/2.  Exposed for convergence-order studies.
std::vector<double> radial_eigenvalues_raw(double e_max, int grid_n,
                                           double r_max);

// Three grid levels (grid_n, 2 grid_n, 4 grid_n) combined by repeated
// Richardson extrapolation of the second-order scheme.
RadialResult radial_eigensolve(double e_max, int grid_n);

}  // namespace psqm
