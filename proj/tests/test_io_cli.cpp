#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psqm/field_io.hpp"
#include "psqm/ham_parser.hpp"
#include "psqm/phase_grid.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>

using namespace psqm;

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("PSQM_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = std::string(cli) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[512];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int raw = pclose(p);
  return {WEXITSTATUS(raw), out};
}

std::string tmp_path(const std::string& name) {
  return "/tmp/psqm_test_" + name;
}

void truncate_file(const std::string& path, long bytes) {
  std::ifstream is(path, std::ios::binary);
  std::string data((std::istreambuf_iterator<char>(is)),
                   std::istreambuf_iterator<char>());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  os.write(data.data(), bytes);
}

}  // namespace

TEST_CASE("psqf round trip is bitwise exact") {
  auto g = PhaseGrid::box(1, 6.0, 16, 1.0, 0.0);
  Field f(g);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto& x : f.v) x = cplx(u(rng), u(rng));
  auto path = tmp_path("roundtrip.psqf");
  write_field(path, f);
  Field r = read_field(path);
  REQUIRE(r.grid == f.grid);
  for (std::size_t i = 0; i < f.v.size(); ++i) CHECK(r.v[i] == f.v[i]);
}

TEST_CASE("psqf reader rejects malformed files") {
  auto g = PhaseGrid::box(1, 6.0, 8);
  Field f(g);
  auto path = tmp_path("bad.psqf");

  SUBCASE("bad magic") {
    std::ofstream os(path, std::ios::binary);
    os << "NOPE" << std::string(64, '\0');
    os.close();
    CHECK_THROWS_WITH_AS(read_field(path), doctest::Contains("magic"),
                         std::runtime_error);
  }
  SUBCASE("unsupported version") {
    write_field(path, f);
    std::fstream os(path, std::ios::binary | std::ios::in | std::ios::out);
    os.seekp(4);
    std::uint32_t v = 2;
    os.write(reinterpret_cast<const char*>(&v), 4);
    os.close();
    CHECK_THROWS_WITH_AS(read_field(path), doctest::Contains("version"),
                         std::runtime_error);
  }
  SUBCASE("truncated header") {
    write_field(path, f);
    truncate_file(path, 20);
    CHECK_THROWS_WITH_AS(read_field(path), doctest::Contains("truncated"),
                         std::runtime_error);
  }
  SUBCASE("truncated payload") {
    write_field(path, f);
    truncate_file(path, 4 + 4 + 4 + 2 * 24 + 16 + 100);
    CHECK_THROWS_WITH_AS(read_field(path), doctest::Contains("truncated"),
                         std::runtime_error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS(read_field(tmp_path("does_not_exist.psqf")));
  }
}

TEST_CASE("hamiltonian parser handles the standard specs") {
  auto h = parse_hamiltonian("(q^2 + p^2)/2", 1);
  CHECK(h.eval({2.0, 0.0}) == cplx(2.0, 0.0));
  CHECK(h.eval({1.0, 3.0}) == cplx(5.0, 0.0));

  auto h2 = parse_hamiltonian("0.5*px^2 + 0.5*py^2 + x^2*y", 2);
  CHECK(h2.eval({2.0, 3.0, 1.0, 2.0}) == cplx(0.5 + 2.0 + 12.0, 0.0));

  // precedence and unary minus
  auto h3 = parse_hamiltonian("1 - 2*q^2", 1);
  CHECK(h3.eval({2.0, 0.0}) == cplx(-7.0, 0.0));
  auto h4 = parse_hamiltonian("-q^2", 1);
  CHECK(h4.eval({3.0, 0.0}) == cplx(-9.0, 0.0));

  // exact rationals: 1/3 is not a rounded double
  auto h5 = parse_hamiltonian("1/3 * q", 1);
  CHECK(h5.eval({3.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hamiltonian parser rejects malformed input") {
  CHECK_THROWS_AS(parse_hamiltonian("q +", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_hamiltonian("(q", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_hamiltonian("x + y", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_hamiltonian("q p", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_hamiltonian("q^100", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_hamiltonian("1/0", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_hamiltonian("q", 3), std::invalid_argument);
}

TEST_CASE("cli: algebra verify passes and prints the commutator table") {
  auto r = run_cli("algebra verify --m 2 --t 1/3 --hbar 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("casimir") != std::string::npos);
}

TEST_CASE("cli: ho3d solve and spectrum") {
  auto r = run_cli("ho3d solve --n 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("energy=3.5") != std::string::npos);
  CHECK(r.out.find("eigen=yes") != std::string::npos);

  auto s = run_cli("ho3d spectrum --emax 3 --grid-n 400");
  CHECK(s.status == 0);
  CHECK(s.out.find("converged") != std::string::npos);
  // levels 1.5 and 2.5 should lead the list
  CHECK(s.out.find("1.5") != std::string::npos);
  CHECK(s.out.find("2.5") != std::string::npos);
}

TEST_CASE("cli: nc state reports the deformed energy") {
  auto json_path = tmp_path("nc11.json");
  auto r = run_cli("nc state --nx 1 --ny 1 --theta 1 --json " + json_path);
  CHECK(r.status == 0);
  CHECK(r.out.find("4.24264068") != std::string::npos);
  CHECK(r.out.find("eigen=yes") != std::string::npos);
  std::ifstream is(json_path);
  std::string dumped((std::istreambuf_iterator<char>(is)),
                     std::istreambuf_iterator<char>());
  CHECK(dumped.find("\"energy\"") != std::string::npos);
}

TEST_CASE("cli: nc wigner + export csv") {
  auto psqf = tmp_path("w00.psqf");
  auto r = run_cli("nc wigner --nx 0 --ny 0 --theta 1/2 --grid-n 8 --out " +
                   psqf);
  CHECK(r.status == 0);
  Field f = read_field(psqf);
  CHECK(f.grid.dim == 2);
  CHECK(f.grid.theta == doctest::Approx(0.5));

  auto csv = tmp_path("w00.csv");
  auto e = run_cli("export csv --in " + psqf + " --slice 1=0,3=0 --out " + csv);
  CHECK(e.status == 0);
  std::ifstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header == "axis1,axis2,re,im");
  int rows = 0;
  std::string line;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 8 * 8);

  auto bad = run_cli("export csv --in " + psqf + " --slice 1=0 --out " + csv);
  CHECK(bad.status == 2);
}

TEST_CASE("cli: star mul of a state with itself converges") {
  auto g = PhaseGrid::box(1, 10.0, 32);
  Field f(g);
  const double a = 0.25;
  for (std::size_t i = 0; i < g.axes[0].n; ++i)
    for (std::size_t j = 0; j < g.axes[1].n; ++j) {
      double q = g.node(0, i), p = g.node(1, j);
      f.v[i * g.axes[1].n + j] = std::exp(-a * (q * q + p * p));
    }
  auto in = tmp_path("gauss.psqf"), out = tmp_path("gauss_star.psqf");
  write_field(in, f);
  auto r = run_cli("star mul --left " + in + " --right " + in +
                   " --order 20 --out " + out);
  CHECK(r.status == 0);
  CHECK(r.out.find("converged") != std::string::npos);
  Field prod = read_field(out);
  // closed form at the origin: 1/(1 + hbar^2 a^2)
  double want = 1.0 / (1.0 + a * a);
  std::size_t mid = 16 * 32 + 16;
  double q0 = g.node(0, 16), p0 = g.node(1, 16);
  double expect =
      want * std::exp(-2 * a / (1 + a * a) * (q0 * q0 + p0 * p0));
  CHECK(std::abs(prod.v[mid].real() - expect) < 1e-9);
}

TEST_CASE("cli: evolve advances a coherent state") {
  auto g = PhaseGrid::box(1, 6.0, 32);
  Field f(g);
  for (std::size_t i = 0; i < g.axes[0].n; ++i)
    for (std::size_t j = 0; j < g.axes[1].n; ++j) {
      double q = g.node(0, i), p = g.node(1, j);
      f.v[i * g.axes[1].n + j] = std::exp(-(q * q + p * p));
    }
  auto in = tmp_path("evin.psqf"), out = tmp_path("evout.psqf");
  write_field(in, f);
  auto r = run_cli("evolve --state " + in +
                   " --hamiltonian \"(q^2+p^2)/2\" --t 0.1 --dt 0.02 --out " +
                   out);
  CHECK(r.status == 0);
  Field ev = read_field(out);
  // ground state only acquires the phase e^{-i E t}, E = 1/2
  cplx phase = std::exp(cplx(0, -0.5 * 0.1));
  double err = 0;
  for (std::size_t i = 0; i < ev.v.size(); ++i)
    err = std::max(err, std::abs(ev.v[i] - phase * f.v[i]));
  CHECK(err < 1e-6);

  auto bad = run_cli("evolve --state " + in +
                     " --hamiltonian \"q +\" --t 0.1 --dt 0.02 --out " + out);
  CHECK(bad.status == 2);
}
