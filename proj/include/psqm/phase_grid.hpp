#pragma once
// Uniform tensor-product phase-space grids with cell-centered nodes, complex
// fields on them, spectral differentiation, and quadrature.

#include "psqm/fft.hpp"
#include "psqm/polygauss.hpp"
#include "psqm/symbol.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace psqm {

struct GridAxis {
  double min = -8.0, max = 8.0;
  std::size_t n = 64;
};

std::size_t grid_mem_cap();  // complex-value cap; PSQM_MEM_CAP overrides

struct PhaseGrid {
  int dim = 1;                  // spatial dimension d; 2d axes (q_1..q_d, p_1..p_d)
  std::vector<GridAxis> axes;   // size 2d
  double hbar = 1.0;
  double theta = 0.0;

  PhaseGrid() = default;
  PhaseGrid(int d, std::vector<GridAxis> ax, double h = 1.0, double th = 0.0);

  // uniform box [-L, L] on every axis with n points each
  static PhaseGrid box(int d, double half_width, std::size_t n, double h = 1.0,
                       double th = 0.0);

  std::size_t total() const {
    std::size_t t = 1;
    for (const auto& a : axes) t *= a.n;
    return t;
  }
  double dx(int axis) const {
    return (axes[axis].max - axes[axis].min) / static_cast<double>(axes[axis].n);
  }
  double node(int axis, std::size_t i) const {
    return axes[axis].min + (static_cast<double>(i) + 0.5) * dx(axis);
  }
  double cell_measure() const {
    double m = 1.0;
    for (std::size_t a = 0; a < axes.size(); ++a)
      m *= dx(static_cast<int>(a));
    return m;
  }

  friend bool operator==(const PhaseGrid& a, const PhaseGrid& b) {
    if (a.dim != b.dim || a.axes.size() != b.axes.size()) return false;
    for (std::size_t k = 0; k < a.axes.size(); ++k)
      if (a.axes[k].min != b.axes[k].min || a.axes[k].max != b.axes[k].max ||
          a.axes[k].n != b.axes[k].n)
        return false;
    return a.hbar == b.hbar && a.theta == b.theta;
  }
  friend bool operator!=(const PhaseGrid& a, const PhaseGrid& b) {
    return !(a == b);
  }
};

struct Field {
  PhaseGrid grid;
  std::vector<cplx> v;  // row-major, last axis fastest

  Field() = default;
  explicit Field(const PhaseGrid& g) : grid(g), v(g.total(), cplx(0)) {}

  cplx& at(const std::vector<std::size_t>& idx);
};

using PointFn = std::function<cplx(const std::vector<double>&)>;

Field sample(const PhaseGrid& g, const PointFn& f);
Field sample(const PhaseGrid& g, const PolyGaussForm& s);
Field sample(const PhaseGrid& g, const PolynomialSymbol& a);

Field spectral_partial(const Field& f, int axis, int order);

cplx integrate(const Field& f);
cplx inner(const Field& f, const Field& g);  // conjugates the first argument
double norm2(const Field& f);                // sqrt(inner(f,f).real())
Field normalize(const Field& f);

Field conj_field(const Field& f);
double max_abs(const Field& f);
double max_abs_diff(const Field& f, const Field& g);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(cplx c, const Field& a);
Field pointwise_mul(const Field& a, const Field& b);

}  // namespace psqm
