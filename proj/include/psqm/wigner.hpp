#pragma once
// Wigner functions from quasi-amplitudes (f_W = psi * conj(psi) under the
// star product), marginals, expectation values, and RK4 time evolution of
// quasi-amplitudes under i hbar d_t psi = H * psi.

#include "psqm/phase_grid.hpp"
#include "psqm/star_grid.hpp"

namespace psqm {

struct WignerBuild {
  Field f;             // real, renormalized to unit integral
  double raw_integral = 0;
  double imag_residue = 0;  // max |Im| relative to max |f| before discarding
  StarReport report;
};

// Throws runtime_error when the imaginary residue exceeds 1e-6 (series
// convergence failure).
WignerBuild wigner_from_amplitude(const Field& psi, int K, const NCParams& nc,
                                  bool accel = false);

// Lower-dimensional density: complementary axes summed out with their cell
// measure.  kept axes appear in ascending order, row-major, last fastest.
struct MarginalDensity {
  std::vector<int> kept;        // axis indices into the source grid
  std::vector<GridAxis> axes;
  std::vector<double> v;
  double cell_measure() const {
    double m = 1;
    for (const auto& a : axes) m *= (a.max - a.min) / a.n;
    return m;
  }
};

MarginalDensity marginal(const Field& f, const std::vector<int>& keep);

// Max deviation between the marginal of star_series(psi, conj psi) and the
// marginal of the pointwise |psi|^2, both renormalized to unit mass.
double marginal_star_drop_check(const Field& psi, int K, const NCParams& nc,
                                const std::vector<int>& keep);

// Quadrature of a * f_W; throws when the imaginary residue exceeds 1e-8.
double expectation(const PolynomialSymbol& a, const Field& f_w);

struct EvolveOptions {
  bool check_spectral_radius = true;  // power-iteration stability estimate
  double norm_drift_abort = 1e-4;
};

Field evolve(const Field& psi, const PolynomialSymbol& h, double t_final,
             double dt, const NCParams& nc, const EvolveOptions& opt = {});

}  // namespace psqm
