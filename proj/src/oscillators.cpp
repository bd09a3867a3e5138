#include "psqm/oscillators.hpp"

#include "psqm/bopp.hpp"

#include <cmath>

namespace psqm {

namespace {
const double pi = 3.14159265358979323846;

// (sum_v u_v^2)^k as a polynomial symbol over 2d variables
PolynomialSymbol radius2_pow(int d, int k) {
  PolynomialSymbol r2 = PolynomialSymbol::zero(d);
  for (int v = 0; v < 2 * d; ++v)
    r2 += PolynomialSymbol::variable(d, v, 2);
  PolynomialSymbol out = PolynomialSymbol::constant(d, CScalar(1));
  for (int j = 0; j < k; ++j) out = out * r2;
  return out;
}
}  // namespace

nlohmann::json SpectrumResult::to_json() const {
  nlohmann::json j;
  j["quantum_numbers"] = quantum_numbers;
  j["energy"] = energy;
  j["energy_exact"] = energy_exact.str();
  j["residual"] = residual;
  j["is_eigen"] = is_eigen;
  j["theta"] = theta;
  j["state"] = state.to_json();
  return j;
}

PolynomialSymbol oscillator_hamiltonian(int d) {
  PolynomialSymbol h = PolynomialSymbol::zero(d);
  CScalar half(Rat(1, 2));
  for (int v = 0; v < 2 * d; ++v)
    h += half * PolynomialSymbol::variable(d, v, 2);
  return h;
}

SpectrumResult ho3d_state(int n) {
  if (n < 0) throw std::invalid_argument("ho3d_state: n must be >= 0");
  const int d = 3;
  // Psi_n = e^{-t} F(-n, 3, 2t) with t = |q|^2 + |p|^2
  auto coef = kummer_poly_coeffs(n, Rat(3), Rat(2));
  PolynomialSymbol poly = PolynomialSymbol::zero(d);
  for (int k = 0; k <= n; ++k)
    poly += CScalar(coef[k]) * radius2_pow(d, k);
  PolyGaussForm state(d, poly, PolyGaussForm::scaled_identity(d, Surd(1)));

  NCParams nc(Rat(1));
  auto chk = check_star_eigen(oscillator_hamiltonian(d), state, nc);

  SpectrumResult res;
  res.quantum_numbers = {n};
  res.energy_exact = chk.E;
  res.energy = chk.E.to_c().real();
  res.state = state;
  res.residual = chk.residual_norm;
  res.is_eigen = chk.is_eigen;
  res.theta = 0;
  return res;
}

PolyGaussForm ho3d_wigner(int n) {
  auto res = ho3d_state(n);
  // integral of t^k e^{-t} over R^6 is pi^3 (k+2)!/2, so the state's
  // integral is pi^3 * sum_k a_k (k+2)!/2, rational up to pi^3
  auto coef = kummer_poly_coeffs(n, Rat(3), Rat(2));
  Rat q(0);
  for (int k = 0; k <= n; ++k)
    q += coef[k] * factorial_rat(k + 2) / Rat(2);
  if (q == 0)
    throw std::logic_error("ho3d_wigner: degenerate normalization");
  PolyGaussForm w = res.state;
  w.norm = 1.0 / (pi * pi * pi * to_double(q));
  return w;
}

std::array<WeylOperator, 4> nc_coordinates(const Rat& theta) {
  const int d = 2;
  NCParams nc(Rat(1), theta);
  Surd s = Surd::sqrt_of(1 + theta * theta);
  CScalar inv_s(Surd(Rat(1)) / s);
  CScalar th{Surd(theta)};
  auto op = [&](int v) {
    return bopp_operator(PolynomialSymbol::variable(d, v), nc);
  };
  std::array<WeylOperator, 4> t;
  t[0] = op(0);                                // x~* = x*
  t[1] = inv_s * (op(1) - th * op(2));         // y~* = (y* - th px*)/s
  t[2] = inv_s * (op(2) + th * op(1));         // px~* = (px* + th y*)/s
  t[3] = op(3);                                // py~* = py*
  return t;
}

SpectrumResult nc_state(int nx, int ny, const Rat& theta) {
  if (nx < 0 || ny < 0)
    throw std::invalid_argument("nc_state: quantum numbers must be >= 0");
  const int d = 2;
  NCParams nc(Rat(1), theta);
  Surd s = Surd::sqrt_of(1 + theta * theta);
  Surd inv_s = Surd(Rat(1)) / s;

  // ground state e^{-|u~|^2 / s}: the tilde quadratic form is the identity
  // in the original variables, so only the width changes
  PolyGaussForm state(d, PolynomialSymbol::constant(d, CScalar(1)),
                      PolyGaussForm::scaled_identity(d, inv_s));

  auto t = nc_coordinates(theta);
  CScalar i = CScalar::i();
  WeylOperator ax_dag = t[0] - i * t[2];  // x~* - i px~*, up to 1/sqrt2
  WeylOperator ay_dag = t[1] - i * t[3];  // y~* - i py~*, up to 1/sqrt2
  for (int k = 0; k < nx; ++k) state = polygauss_apply(ax_dag, state);
  for (int k = 0; k < ny; ++k) state = polygauss_apply(ay_dag, state);
  // the printed 1/sqrt(n!) ladder convention plus the dropped 1/sqrt2
  // factors, applied as a numeric prefactor
  state.norm = 1.0 / pi / std::pow(2.0, 0.5 * (nx + ny)) /
               std::sqrt(to_double(factorial_rat(nx) * factorial_rat(ny)));

  auto chk = check_star_eigen(oscillator_hamiltonian(d), state, nc);

  SpectrumResult res;
  res.quantum_numbers = {nx, ny};
  res.energy_exact = chk.E;
  res.energy = chk.E.to_c().real();
  res.state = state;
  res.residual = chk.residual_norm;
  res.is_eigen = chk.is_eigen;
  res.theta = to_double(theta);
  return res;
}

PointFn nc_wigner(int nx, int ny, double theta) {
  double beta = 1.0 / (1.0 + theta * theta);
  return PointFn([nx, ny, theta, beta](const std::vector<double>& u) {
    double x = u[0], y = u[1], px = u[2], py = u[3];
    double ax = px + theta * y;
    double ay = y - theta * px;
    double u1 = x * x + beta * ax * ax;
    double u2 = beta * ay * ay + py * py;
    return cplx(laguerre(nx, 2 * u1) * laguerre(ny, 2 * u2) *
                std::exp(-(u1 + u2)));
  });
}

Field nc_wigner_field(const PhaseGrid& g, int nx, int ny, double theta) {
  if (g.axes.size() != 4)
    throw std::invalid_argument("nc_wigner_field: need a 4-axis grid");
  Field f = sample(g, nc_wigner(nx, ny, theta));
  cplx total = integrate(f);
  if (std::abs(total) == 0.0)
    throw std::domain_error("nc_wigner_field: zero integral");
  return (cplx(1.0) / total) * f;
}

}  // namespace psqm
