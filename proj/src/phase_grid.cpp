#include "psqm/phase_grid.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace psqm {

std::size_t grid_mem_cap() {
  if (const char* env = std::getenv("PSQM_MEM_CAP")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && cap > 0) return static_cast<std::size_t>(cap);
  }
  return std::size_t(1) << 30;
}

PhaseGrid::PhaseGrid(int d, std::vector<GridAxis> ax, double h, double th)
    : dim(d), axes(std::move(ax)), hbar(h), theta(th) {
  if (d < 1) throw std::invalid_argument("PhaseGrid: dim must be >= 1");
  if (axes.size() != 2 * static_cast<std::size_t>(d))
    throw std::invalid_argument("PhaseGrid: need 2*dim axes");
  std::size_t t = 1;
  for (const auto& a : axes) {
    if (!(a.max > a.min)) throw std::invalid_argument("PhaseGrid: max <= min");
    if (a.n < 8 || !is_pow2(a.n))
      throw std::invalid_argument("PhaseGrid: n must be a power of two >= 8");
    if (t > grid_mem_cap() / a.n)
      throw std::invalid_argument("PhaseGrid: memory cap exceeded");
    t *= a.n;
  }
}

PhaseGrid PhaseGrid::box(int d, double half_width, std::size_t n, double h,
                         double th) {
  std::vector<GridAxis> ax(2 * d, GridAxis{-half_width, half_width, n});
  return PhaseGrid(d, std::move(ax), h, th);
}

cplx& Field::at(const std::vector<std::size_t>& idx) {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) flat = flat * grid.axes[a].n + idx[a];
  return v[flat];
}

Field sample(const PhaseGrid& g, const PointFn& f) {
  Field out(g);
  const std::size_t na = g.axes.size();
  std::vector<std::size_t> idx(na, 0);
  std::vector<double> u(na);
  for (std::size_t a = 0; a < na; ++a) u[a] = g.node(static_cast<int>(a), 0);
  const std::size_t total = g.total();
  for (std::size_t flat = 0; flat < total; ++flat) {
    cplx val = f(u);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
      throw std::runtime_error("sample: non-finite value");
    out.v[flat] = val;
    // advance odometer (last axis fastest)
    for (std::size_t a = na; a-- > 0;) {
      if (++idx[a] < g.axes[a].n) {
        u[a] = g.node(static_cast<int>(a), idx[a]);
        break;
      }
      idx[a] = 0;
      u[a] = g.node(static_cast<int>(a), 0);
    }
  }
  return out;
}

Field sample(const PhaseGrid& g, const PolyGaussForm& s) {
  if (2 * s.dim != static_cast<int>(g.axes.size()))
    throw std::invalid_argument("sample: state/grid dimension mismatch");
  return sample(g, PointFn([&s](const std::vector<double>& u) {
    return s.eval(u);
  }));
}

Field sample(const PhaseGrid& g, const PolynomialSymbol& a) {
  if (2 * a.dim != static_cast<int>(g.axes.size()))
    throw std::invalid_argument("sample: symbol/grid dimension mismatch");
  return sample(g, PointFn([&a](const std::vector<double>& u) {
    return a.eval(u);
  }));
}

Field spectral_partial(const Field& f, int axis, int order) {
  const auto& g = f.grid;
  if (axis < 0 || axis >= static_cast<int>(g.axes.size()))
    throw std::invalid_argument("spectral_partial: axis out of range");
  if (order < 1) throw std::invalid_argument("spectral_partial: order < 1");
  const std::size_t n = g.axes[axis].n;
  std::size_t outer = 1, inner = 1;
  for (int a = 0; a < axis; ++a) outer *= g.axes[a].n;
  for (std::size_t a = axis + 1; a < g.axes.size(); ++a) inner *= g.axes[a].n;

  Field out = f;
  fft_axis(out.v.data(), outer, n, inner, false);

  const double L = g.axes[axis].max - g.axes[axis].min;
  const double pi = 3.14159265358979323846;
  std::vector<cplx> mult(n);
  for (std::size_t j = 0; j < n; ++j) {
    // FFT bin j corresponds to wavenumber index j (j < n/2) or j - n
    double kidx = (j < n / 2) ? static_cast<double>(j)
                              : static_cast<double>(j) - static_cast<double>(n);
    if (j == n / 2 && (order % 2 == 1)) {
      mult[j] = 0.0;  // Nyquist mode dropped for odd orders
      continue;
    }
    cplx ik(0.0, 2.0 * pi * kidx / L);
    cplx m = 1.0;
    for (int o = 0; o < order; ++o) m *= ik;
    mult[j] = m;
  }
  // apply per line
  for (std::size_t o = 0; o < outer; ++o) {
    cplx* base = out.v.data() + o * n * inner;
    for (std::size_t j = 0; j < n; ++j) {
      cplx m = mult[j];
      cplx* line = base + j * inner;
      for (std::size_t t = 0; t < inner; ++t) line[t] *= m;
    }
  }
  fft_axis(out.v.data(), outer, n, inner, true);
  return out;
}

cplx integrate(const Field& f) {
  cplx s = 0.0;
  for (const cplx& x : f.v) s += x;
  return s * f.grid.cell_measure();
}

cplx inner(const Field& f, const Field& g) {
  if (f.grid != g.grid) throw std::invalid_argument("inner: grid mismatch");
  cplx s = 0.0;
  for (std::size_t k = 0; k < f.v.size(); ++k) s += std::conj(f.v[k]) * g.v[k];
  return s * f.grid.cell_measure();
}

double norm2(const Field& f) {
  double s = 0.0;
  for (const cplx& x : f.v) s += std::norm(x);
  return std::sqrt(s * f.grid.cell_measure());
}

Field normalize(const Field& f) {
  double n = norm2(f);
  if (n == 0.0) throw std::domain_error("normalize: zero-norm field");
  Field out = f;
  double s = 1.0 / n;
  for (cplx& x : out.v) x *= s;
  return out;
}

Field conj_field(const Field& f) {
  Field out = f;
  for (cplx& x : out.v) x = std::conj(x);
  return out;
}

double max_abs(const Field& f) {
  double m = 0.0;
  for (const cplx& x : f.v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const Field& f, const Field& g) {
  if (f.grid != g.grid)
    throw std::invalid_argument("max_abs_diff: grid mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < f.v.size(); ++k)
    m = std::max(m, std::abs(f.v[k] - g.v[k]));
  return m;
}

Field operator+(const Field& a, const Field& b) {
  if (a.grid != b.grid) throw std::invalid_argument("field add: grid mismatch");
  Field out = a;
  for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] += b.v[k];
  return out;
}

Field operator-(const Field& a, const Field& b) {
  if (a.grid != b.grid) throw std::invalid_argument("field sub: grid mismatch");
  Field out = a;
  for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] -= b.v[k];
  return out;
}

Field operator*(cplx c, const Field& a) {
  Field out = a;
  for (cplx& x : out.v) x *= c;
  return out;
}

Field pointwise_mul(const Field& a, const Field& b) {
  if (a.grid != b.grid) throw std::invalid_argument("field mul: grid mismatch");
  Field out = a;
  for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] *= b.v[k];
  return out;
}

}  // namespace psqm
