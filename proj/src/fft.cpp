#include "psqm/fft.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace psqm {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

// Twiddle table in the classic "offset half" layout: for each stage length
// len, w_len^k = exp(-2 pi i k/len) lives at index len/2 + k, k < len/2.
const std::vector<cplx>& twiddles(std::size_t n) {
  static std::map<std::size_t, std::vector<cplx>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> tw(n);
  const double pi = 3.14159265358979323846;
  for (std::size_t len = 2; len <= n; len <<= 1)
    for (std::size_t k = 0; k < len / 2; ++k) {
      double ang = -2.0 * pi * static_cast<double>(k) / static_cast<double>(len);
      tw[len / 2 + k] = {std::cos(ang), std::sin(ang)};
    }
  return cache.emplace(n, std::move(tw)).first->second;
}

const std::vector<std::size_t>& bitrev(std::size_t n) {
  static std::map<std::size_t, std::vector<std::size_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::size_t> rev(n, 0);
  std::size_t lg = 0;
  while ((std::size_t(1) << lg) < n) ++lg;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < lg; ++b)
      if (i & (std::size_t(1) << b)) r |= std::size_t(1) << (lg - 1 - b);
    rev[i] = r;
  }
  return cache.emplace(n, std::move(rev)).first->second;
}

}  // namespace

void fft_axis(cplx* data, std::size_t outer, std::size_t n, std::size_t inner,
              bool inverse) {
  if (!is_pow2(n)) throw std::invalid_argument("fft_axis: n not a power of two");
  if (n == 1) return;
  const auto& tw = twiddles(n);
  const auto& rev = bitrev(n);
  const std::size_t block = n * inner;

  for (std::size_t o = 0; o < outer; ++o) {
    cplx* base = data + o * block;

    // bit-reversal permutation of lines
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = rev[i];
      if (j <= i) continue;
      cplx* a = base + i * inner;
      cplx* b = base + j * inner;
      for (std::size_t t = 0; t < inner; ++t) std::swap(a[t], b[t]);
    }

    // butterflies
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len >> 1;
      const cplx* w = &tw[half];
      for (std::size_t start = 0; start < n; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          cplx wk = inverse ? std::conj(w[k]) : w[k];
          cplx* a = base + (start + k) * inner;
          cplx* b = base + (start + k + half) * inner;
          const double wr = wk.real(), wi = wk.imag();
          for (std::size_t t = 0; t < inner; ++t) {
            double br = b[t].real(), bi = b[t].imag();
            double tr = br * wr - bi * wi;
            double ti = br * wi + bi * wr;
            double ar = a[t].real(), ai = a[t].imag();
            b[t] = {ar - tr, ai - ti};
            a[t] = {ar + tr, ai + ti};
          }
        }
      }
    }

    if (inverse) {
      const double s = 1.0 / static_cast<double>(n);
      for (std::size_t t = 0; t < block; ++t) base[t] *= s;
    }
  }
}

}  // namespace psqm
