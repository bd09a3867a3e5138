#pragma once
// Closed-form oscillator solutions in phase space.
//  - 3D isotropic oscillator: Psi_n = e^{-(q^2+p^2)} F(-n,3,2(q^2+p^2)) with
//    exact rational polynomial coefficients and energy n + 3/2.
//  - 2D theta-deformed oscillator: ladder construction over the tilde
//    coordinates, ground state width 1/sqrt(1+theta^2), energy
//    sqrt(1+theta^2)(n_x+n_y+1).  All coefficients live in the surd field
//    Q(sqrt(1+theta^2)), so the eigen checks are zero-tolerance.
//  - Closed Laguerre form of the deformed Wigner functions.

#include "psqm/phase_grid.hpp"
#include "psqm/polygauss.hpp"
#include "psqm/special.hpp"
#include "psqm/weyl.hpp"

#include <array>
#include <vector>

namespace psqm {

struct SpectrumResult {
  std::vector<int> quantum_numbers;
  double energy = 0;
  CScalar energy_exact;
  PolyGaussForm state;
  double residual = 0;     // eigen defect norm from the exact calculus
  bool is_eigen = false;
  double theta = 0;

  nlohmann::json to_json() const;
};

// H = sum_i (p_i^2 + q_i^2)/2 in d spatial dimensions
PolynomialSymbol oscillator_hamiltonian(int d);

SpectrumResult ho3d_state(int n);

// Same shape as Psi_n, scaled so the full phase-space integral is exactly 1
// (the scale is computed from the closed-form Gaussian moments).
PolyGaussForm ho3d_wigner(int n);

// Tilde coordinates {x~*, y~*, px~*, py~*} as exact Weyl operators.
std::array<WeylOperator, 4> nc_coordinates(const Rat& theta);

SpectrumResult nc_state(int nx, int ny, const Rat& theta);

// Closed Laguerre form of the deformed Wigner function (unnormalized).
PointFn nc_wigner(int nx, int ny, double theta);

// Sampled on the grid and normalized to unit integral.
Field nc_wigner_field(const PhaseGrid& g, int nx, int ny, double theta);

}  // namespace psqm
