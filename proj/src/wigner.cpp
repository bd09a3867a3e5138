#include "psqm/wigner.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

namespace psqm {

WignerBuild wigner_from_amplitude(const Field& psi, int K, const NCParams& nc,
                                  bool accel) {
  WignerBuild out{Field(psi.grid)};
  Field raw = star_series(psi, conj_field(psi), K, nc, &out.report, accel);

  double amax = max_abs(raw);
  double imax = 0;
  for (const cplx& x : raw.v) imax = std::max(imax, std::abs(x.imag()));
  out.imag_residue = (amax > 0) ? imax / amax : imax;
  if (out.imag_residue > 1e-6) {
    std::ostringstream os;
    os << "wigner_from_amplitude: series did not converge (imaginary residue "
       << out.imag_residue << ")";
    throw std::runtime_error(os.str());
  }

  cplx total = integrate(raw);
  out.raw_integral = total.real();
  if (out.raw_integral == 0.0)
    throw std::domain_error("wigner_from_amplitude: zero integral");
  out.f = Field(psi.grid);
  for (std::size_t t = 0; t < raw.v.size(); ++t)
    out.f.v[t] = cplx(raw.v[t].real() / out.raw_integral);
  return out;
}

MarginalDensity marginal(const Field& f, const std::vector<int>& keep) {
  const auto& g = f.grid;
  const int na = static_cast<int>(g.axes.size());
  if (keep.empty()) throw std::invalid_argument("marginal: empty keep set");
  std::vector<bool> is_kept(na, false);
  for (int a : keep) {
    if (a < 0 || a >= na)
      throw std::invalid_argument("marginal: axis out of range");
    if (is_kept[a]) throw std::invalid_argument("marginal: duplicate axis");
    is_kept[a] = true;
  }

  MarginalDensity out;
  double dropped_measure = 1.0;
  for (int a = 0; a < na; ++a) {
    if (is_kept[a]) {
      out.kept.push_back(a);
      out.axes.push_back(g.axes[a]);
    } else {
      dropped_measure *= (g.axes[a].max - g.axes[a].min) / g.axes[a].n;
    }
  }
  std::size_t m = 1;
  for (const auto& a : out.axes) m *= a.n;
  out.v.assign(m, 0.0);

  // row-major strides of the output within the source index space
  std::vector<std::size_t> stride(na, 0);
  std::size_t s = 1;
  for (int k = static_cast<int>(out.kept.size()) - 1; k >= 0; --k) {
    stride[out.kept[k]] = s;
    s *= out.axes[k].n;
  }

  std::vector<std::size_t> idx(na, 0);
  std::size_t off = 0;
  for (std::size_t flat = 0; flat < f.v.size(); ++flat) {
    out.v[off] += f.v[flat].real() * dropped_measure;
    for (int a = na - 1; a >= 0; --a) {
      off += stride[a];
      if (++idx[a] < g.axes[a].n) break;
      off -= stride[a] * g.axes[a].n;
      idx[a] = 0;
    }
  }
  return out;
}

double marginal_star_drop_check(const Field& psi, int K, const NCParams& nc,
                                const std::vector<int>& keep) {
  Field starred = star_series(psi, conj_field(psi), K, nc);
  Field plain = pointwise_mul(psi, conj_field(psi));
  auto ms = marginal(starred, keep);
  auto mp = marginal(plain, keep);
  // compare densities normalized to unit mass
  double cm = ms.cell_measure();
  double ts = 0, tp = 0;
  for (double x : ms.v) ts += x * cm;
  for (double x : mp.v) tp += x * cm;
  if (ts == 0 || tp == 0)
    throw std::domain_error("marginal_star_drop_check: zero mass");
  double dev = 0;
  for (std::size_t k = 0; k < ms.v.size(); ++k)
    dev = std::max(dev, std::abs(ms.v[k] / ts - mp.v[k] / tp));
  return dev;
}

double expectation(const PolynomialSymbol& a, const Field& f_w) {
  if (2 * a.dim != static_cast<int>(f_w.grid.axes.size()))
    throw std::invalid_argument("expectation: dimension mismatch");
  Field af = sample(f_w.grid, a);
  cplx s = 0.0;
  for (std::size_t t = 0; t < af.v.size(); ++t) s += af.v[t] * f_w.v[t];
  s *= f_w.grid.cell_measure();
  if (std::abs(s.imag()) > 1e-8 * std::max(1.0, std::abs(s.real())))
    throw std::runtime_error("expectation: imaginary residue exceeds 1e-8");
  return s.real();
}

namespace {
double spectral_radius_estimate(const PolynomialSymbol& h, const PhaseGrid& g,
                                const NCParams& nc) {
  std::mt19937 rng(12345);
  std::normal_distribution<double> nd;
  Field x(g);
  for (cplx& v : x.v) v = cplx(nd(rng), nd(rng));
  x = normalize(x);
  double lam = 0;
  for (int it = 0; it < 12; ++it) {
    Field y = star_apply_poly(h, x, nc);
    double n = norm2(y);
    if (n == 0) return 0;
    lam = n;
    x = (cplx(1.0 / n)) * y;
  }
  return lam / to_double(nc.hbar);
}
}  // namespace

Field evolve(const Field& psi, const PolynomialSymbol& h, double t_final,
             double dt, const NCParams& nc, const EvolveOptions& opt) {
  if (t_final < 0) throw std::invalid_argument("evolve: t_final must be >= 0");
  if (t_final == 0) return psi;
  if (!(dt > 0)) throw std::invalid_argument("evolve: dt must be > 0");

  if (opt.check_spectral_radius) {
    double rad = spectral_radius_estimate(h, psi.grid, nc);
    if (rad * dt > 2.8)
      std::cerr << "evolve: warning: spectral radius estimate " << rad
                << " exceeds the RK4 stability bound for dt = " << dt << "\n";
  }

  const cplx minus_i_over_h(0.0, -1.0 / to_double(nc.hbar));
  auto rhs = [&](const Field& x) {
    return minus_i_over_h * star_apply_poly(h, x, nc);
  };

  Field x = psi;
  double n0 = norm2(psi);
  double t = 0;
  while (t < t_final - 1e-12 * t_final) {
    double step = std::min(dt, t_final - t);
    Field k1 = rhs(x);
    Field k2 = rhs(x + cplx(step / 2) * k1);
    Field k3 = rhs(x + cplx(step / 2) * k2);
    Field k4 = rhs(x + cplx(step) * k3);
    x = x + cplx(step / 6) * (k1 + cplx(2.0) * k2 + cplx(2.0) * k3 + k4);
    t += step;
    double n = norm2(x);
    if (n0 > 0 && std::abs(n - n0) / n0 > opt.norm_drift_abort) {
      std::ostringstream os;
      os << "evolve: norm drift " << std::abs(n - n0) / n0 << " at t = " << t
         << " exceeds " << opt.norm_drift_abort << " (dt too large?)";
      throw std::runtime_error(os.str());
    }
  }
  return x;
}

}  // namespace psqm
