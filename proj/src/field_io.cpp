#include "psqm/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace psqm {

namespace {
// this writer targets little-endian hosts; all mainstream desktop/server
// platforms qualify
static_assert(std::endian::native == std::endian::little,
              "PSQF I/O assumes a little-endian host");

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is, const char* what) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error(std::string("read_field: truncated ") + what);
  return v;
}
}  // namespace

void write_field(const std::string& path, const Field& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_field: cannot open " + path);
  os.write("PSQF", 4);
  put<std::uint32_t>(os, 1);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.dim));
  for (const auto& a : f.grid.axes) {
    put<double>(os, a.min);
    put<double>(os, a.max);
    put<std::uint64_t>(os, a.n);
  }
  put<double>(os, f.grid.hbar);
  put<double>(os, f.grid.theta);
  for (const cplx& x : f.v) {
    put<double>(os, x.real());
    put<double>(os, x.imag());
  }
  if (!os) throw std::runtime_error("write_field: write failed on " + path);
}

Field read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_field: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "PSQF", 4) != 0)
    throw std::runtime_error("read_field: bad magic");
  auto version = get<std::uint32_t>(is, "version");
  if (version != 1)
    throw std::runtime_error("read_field: unsupported version " +
                             std::to_string(version));
  auto dim = get<std::uint32_t>(is, "dim");
  if (dim == 0 || dim > 16) throw std::runtime_error("read_field: bad dim");
  std::vector<GridAxis> axes(2 * dim);
  for (auto& a : axes) {
    a.min = get<double>(is, "axis min");
    a.max = get<double>(is, "axis max");
    a.n = static_cast<std::size_t>(get<std::uint64_t>(is, "axis n"));
  }
  double hbar = get<double>(is, "hbar");
  double theta = get<double>(is, "theta");
  PhaseGrid g(static_cast<int>(dim), std::move(axes), hbar, theta);
  Field f(g);
  for (cplx& x : f.v) {
    double re = get<double>(is, "payload");
    double im = get<double>(is, "payload");
    x = cplx(re, im);
  }
  return f;
}

}  // namespace psqm
