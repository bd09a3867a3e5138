// psqm: command-line surface over the phase-space quantum mechanics library.

#include <CLI11.hpp>

#include "psqm/field_io.hpp"
#include "psqm/galilei.hpp"
#include "psqm/ham_parser.hpp"
#include "psqm/oscillators.hpp"
#include "psqm/radial.hpp"
#include "psqm/wigner.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace psqm;

namespace {

// exact rational from "a", "a/b", or a decimal literal
Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat num(Int(s.substr(0, slash)));
    Rat den(Int(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in " + s);
    return num / den;
  }
  auto dot = s.find('.');
  bool neg = !s.empty() && s[0] == '-';
  std::string body = neg ? s.substr(1) : s;
  dot = body.find('.');
  Rat r;
  if (dot == std::string::npos) {
    r = Rat(Int(body));
  } else {
    std::string frac = body.substr(dot + 1);
    r = Rat(Int(body.substr(0, dot)));
    if (!frac.empty())
      r += Rat(Int(frac)) / rat_pow(Rat(10), static_cast<int>(frac.size()));
  }
  return neg ? -r : r;
}

int cmd_algebra_verify(const std::string& ms, const std::string& ts,
                       const std::string& hs) {
  Rat m = parse_rat(ms), t = parse_rat(ts), hbar = parse_rat(hs);
  auto g = galilei_generators(m, t, hbar);
  auto rep = verify_galilei_algebra(g);
  bool all = rep.all_pass;
  for (const auto& c : rep.checks)
    std::printf("%s [%s,%s] = %s\n", c.pass ? "PASS" : "FAIL", c.lhs.c_str(),
                c.rhs.c_str(), c.expected.c_str());

  // boost adjoints with a generic rational velocity
  std::array<Rat, 3> v = {Rat(1, 2), Rat(-1, 3), Rat(2)};
  for (int i = 0; i < 3; ++i) {
    auto bq = boost_adjoint(g, g.Q[i], v);
    auto bp = boost_adjoint(g, g.P[i], v);
    auto bqb = boost_adjoint(g, g.Qbar[i], v);
    bool okq = (bq - g.Q[i]) ==
               WeylOperator::constant(3, CScalar(Surd(v[i] * t)));
    bool okp = (bp - g.P[i]) ==
               WeylOperator::constant(3, CScalar(Surd(v[i] * m)));
    bool okqb = (bqb - g.Qbar[i]) ==
                WeylOperator::constant(3, CScalar(Surd(v[i] * t / 2)));
    std::printf("%s boost: Q%d -> Q%d + v t 1\n", okq ? "PASS" : "FAIL", i + 1,
                i + 1);
    std::printf("%s boost: P%d -> P%d + m v 1\n", okp ? "PASS" : "FAIL", i + 1,
                i + 1);
    std::printf("%s boost: Qbar%d -> Qbar%d + (v t / 2) 1\n",
                okqb ? "PASS" : "FAIL", i + 1, i + 1);
    all = all && okq && okp && okqb;
  }

  auto cas = casimir_check(g);
  std::printf("%s casimir: I1 = 0\n", cas.I1_zero ? "PASS" : "FAIL");
  std::printf("%s casimir: I2 = 0\n", cas.I2_zero ? "PASS" : "FAIL");
  all = all && cas.I1_zero && cas.I2_zero;
  return all ? 0 : 1;
}

void maybe_dump_json(const std::string& path, const SpectrumResult& r) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << r.to_json().dump(2) << "\n";
}

int cmd_ho3d_solve(int n, const std::string& json_out) {
  auto r = ho3d_state(n);
  std::printf("n=%d energy=%.12g (%s) residual=%.3g eigen=%s\n", n, r.energy,
              r.energy_exact.str().c_str(), r.residual,
              r.is_eigen ? "yes" : "no");
  maybe_dump_json(json_out, r);
  return r.is_eigen ? 0 : 1;
}

int cmd_ho3d_spectrum(double emax, int grid_n) {
  auto r = radial_eigensolve(emax, grid_n);
  for (std::size_t k = 0; k < r.energies.size(); ++k)
    std::printf("%s%.10g", k ? " " : "", r.energies[k]);
  std::printf("\n");
  std::printf("grid_n=%d r_max=%g drift=%.3g %s\n", r.grid_n, r.r_max,
              r.max_drift, r.converged ? "converged" : "NOT CONVERGED");
  return r.converged ? 0 : 1;
}

int cmd_nc_state(int nx, int ny, const std::string& theta,
                 const std::string& json_out) {
  auto r = nc_state(nx, ny, parse_rat(theta));
  std::printf("nx=%d ny=%d theta=%g energy=%.12g (%s) residual=%.3g eigen=%s\n",
              nx, ny, r.theta, r.energy, r.energy_exact.str().c_str(),
              r.residual, r.is_eigen ? "yes" : "no");
  maybe_dump_json(json_out, r);
  return r.is_eigen ? 0 : 1;
}

void write_csv_slice(const Field& f, int ax1, int ax2,
                     const std::vector<std::size_t>& fixed,
                     const std::string& path) {
  const auto& g = f.grid;
  std::vector<std::size_t> stride(g.axes.size());
  std::size_t s = 1;
  for (int a = static_cast<int>(g.axes.size()) - 1; a >= 0; --a) {
    stride[a] = s;
    s *= g.axes[a].n;
  }
  std::size_t base = 0;
  for (std::size_t a = 0; a < g.axes.size(); ++a)
    base += fixed[a] * stride[a];
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << "axis1,axis2,re,im\n";
  char buf[128];
  for (std::size_t i = 0; i < g.axes[ax1].n; ++i)
    for (std::size_t j = 0; j < g.axes[ax2].n; ++j) {
      std::size_t off = base + i * stride[ax1] + j * stride[ax2];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n",
                    g.node(ax1, i), g.node(ax2, j), f.v[off].real(),
                    f.v[off].imag());
      os << buf;
    }
}

int cmd_nc_wigner(int nx, int ny, const std::string& theta,
                  const std::string& out, std::size_t grid_n) {
  double th = to_double(parse_rat(theta));
  auto g = PhaseGrid::box(2, 8.0, grid_n, 1.0, th);
  auto f = nc_wigner_field(g, nx, ny, th);
  write_field(out, f);
  // CSV slices through the grid center for quick plotting
  std::vector<std::size_t> center(4, grid_n / 2);
  std::string stem = out;
  auto dotpos = stem.rfind('.');
  if (dotpos != std::string::npos) stem = stem.substr(0, dotpos);
  write_csv_slice(f, 0, 1, center, stem + "_xy.csv");
  write_csv_slice(f, 0, 2, center, stem + "_xpx.csv");
  std::printf("wrote %s and CSV slices (%s_xy.csv, %s_xpx.csv)\n", out.c_str(),
              stem.c_str(), stem.c_str());
  return 0;
}

int cmd_star_mul(const std::string& left, const std::string& right, int order,
                 const std::string& theta_override, const std::string& out) {
  Field f = read_field(left);
  Field g = read_field(right);
  if (f.grid != g.grid)
    throw std::runtime_error("star mul: operand grids differ");
  NCParams nc = NCParams::from_doubles(f.grid.hbar, f.grid.theta);
  if (!theta_override.empty()) {
    nc.theta = parse_rat(theta_override);
    f.grid.theta = g.grid.theta = to_double(nc.theta);
  }
  StarReport rep;
  Field r = star_series(f, g, order, nc, &rep);
  write_field(out, r);
  std::printf("K=%d last_term_rel=%.3g %s\n", rep.K, rep.last_term_rel,
              rep.converged ? "converged" : "NOT CONVERGED");
  return rep.converged ? 0 : 1;
}

int cmd_evolve(const std::string& state, const std::string& ham, double t,
               double dt, const std::string& out) {
  Field f = read_field(state);
  PolynomialSymbol h = parse_hamiltonian(ham, f.grid.dim);
  NCParams nc = NCParams::from_doubles(f.grid.hbar, f.grid.theta);
  Field r = evolve(f, h, t, dt, nc);
  write_field(out, r);
  std::printf("evolved to t=%g in steps of %g\n", t, dt);
  return 0;
}

int cmd_export_csv(const std::string& in, const std::string& slice,
                   const std::string& out) {
  Field f = read_field(in);
  const auto& g = f.grid;
  std::vector<bool> is_fixed(g.axes.size(), false);
  std::vector<std::size_t> fixed(g.axes.size(), 0);
  std::stringstream ss(slice);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("slice spec must be AXIS=VALUE,...");
    int axis = std::stoi(part.substr(0, eq));
    double val = std::stod(part.substr(eq + 1));
    if (axis < 0 || axis >= static_cast<int>(g.axes.size()))
      throw std::invalid_argument("slice axis out of range");
    // nearest node
    const auto& a = g.axes[axis];
    double dx = (a.max - a.min) / a.n;
    double pos = (val - a.min) / dx - 0.5;
    long idx = std::lround(std::max(0.0, pos));
    fixed[axis] = std::min<std::size_t>(a.n - 1, static_cast<std::size_t>(idx));
    is_fixed[axis] = true;
  }
  std::vector<int> keepers;
  for (std::size_t a = 0; a < g.axes.size(); ++a)
    if (!is_fixed[a]) keepers.push_back(static_cast<int>(a));
  if (keepers.size() != 2)
    throw std::invalid_argument("slice must leave exactly two free axes");
  write_csv_slice(f, keepers[0], keepers[1], fixed, out);
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-space quantum mechanics toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // algebra verify
  auto* algebra = app.add_subcommand("algebra", "symbolic operator algebra");
  algebra->require_subcommand(1);
  std::string m = "1", t = "0", hbar = "1";
  auto* verify = algebra->add_subcommand("verify", "check the full algebra");
  verify->add_option("--m", m, "mass (rational)");
  verify->add_option("--t", t, "time parameter (rational)");
  verify->add_option("--hbar", hbar, "hbar (rational)");
  verify->callback([&] { rc = cmd_algebra_verify(m, t, hbar); });

  // ho3d
  auto* ho3d = app.add_subcommand("ho3d", "3D oscillator");
  ho3d->require_subcommand(1);
  int n = 0;
  std::string json_out;
  auto* solve = ho3d->add_subcommand("solve", "closed-form eigenstate");
  solve->add_option("--n", n, "radial quantum number")->required();
  solve->add_option("--json", json_out, "JSON dump path");
  solve->callback([&] { rc = cmd_ho3d_solve(n, json_out); });
  double emax = 5.0;
  int grid_n = 2000;
  auto* spectrum = ho3d->add_subcommand("spectrum", "radial eigensolver");
  spectrum->add_option("--emax", emax, "energy cutoff")->required();
  spectrum->add_option("--grid-n", grid_n, "base radial grid size");
  spectrum->callback([&] { rc = cmd_ho3d_spectrum(emax, grid_n); });

  // nc
  auto* nc = app.add_subcommand("nc", "2D noncommutative oscillator");
  nc->require_subcommand(1);
  int nx = 0, ny = 0;
  std::string theta = "0", out;
  std::size_t wgrid = 32;
  auto* state = nc->add_subcommand("state", "ladder eigenstate");
  state->add_option("--nx", nx)->required();
  state->add_option("--ny", ny)->required();
  state->add_option("--theta", theta, "deformation parameter (rational)");
  state->add_option("--json", json_out, "JSON dump path");
  state->callback([&] { rc = cmd_nc_state(nx, ny, theta, json_out); });
  auto* wigner = nc->add_subcommand("wigner", "closed-form Wigner field");
  wigner->add_option("--nx", nx)->required();
  wigner->add_option("--ny", ny)->required();
  wigner->add_option("--theta", theta);
  wigner->add_option("--out", out, "PSQF output path")->required();
  wigner->add_option("--grid-n", wgrid, "points per axis");
  wigner->callback([&] { rc = cmd_nc_wigner(nx, ny, theta, out, wgrid); });

  // star mul
  auto* star = app.add_subcommand("star", "numerical star products");
  star->require_subcommand(1);
  std::string left, right, theta_override;
  int order = 12;
  auto* mul = star->add_subcommand("mul", "truncated series product");
  mul->add_option("--left", left)->required();
  mul->add_option("--right", right)->required();
  mul->add_option("--order", order, "truncation order K");
  mul->add_option("--theta", theta_override, "override the stored theta");
  mul->add_option("--out", out)->required();
  mul->callback([&] { rc = cmd_star_mul(left, right, order, theta_override, out); });

  // evolve
  std::string state_path, ham;
  double tf = 0, dt = 0.01;
  auto* ev = app.add_subcommand("evolve", "RK4 quasi-amplitude evolution");
  ev->add_option("--state", state_path)->required();
  ev->add_option("--hamiltonian", ham, "polynomial spec, e.g. (q^2+p^2)/2")
      ->required();
  ev->add_option("--t", tf)->required();
  ev->add_option("--dt", dt)->required();
  ev->add_option("--out", out)->required();
  ev->callback([&] { rc = cmd_evolve(state_path, ham, tf, dt, out); });

  // export csv
  std::string in, slice;
  auto* exp = app.add_subcommand("export", "artifact export");
  exp->require_subcommand(1);
  auto* csv = exp->add_subcommand("csv", "2D slice as CSV");
  csv->add_option("--in", in)->required();
  csv->add_option("--slice", slice, "AXIS=VALUE,... fixing all but two axes")
      ->required();
  csv->add_option("--out", out)->required();
  csv->callback([&] { rc = cmd_export_csv(in, slice, out); });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
