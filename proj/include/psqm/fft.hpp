#pragma once
// In-repo iterative radix-2 FFT, batched over an arbitrary tensor axis.
// Data layout is row-major [outer][n][inner]; the butterfly inner loops run
// over the contiguous `inner` stretch so transforms along strided axes stay
// cache- and vector-friendly.

#include <complex>
#include <cstddef>

namespace psqm {

using cplx = std::complex<double>;

// Transform along the middle axis of shape [outer][n][inner].
// n must be a power of two.  inverse applies the conjugate transform and
// scales by 1/n.
void fft_axis(cplx* data, std::size_t outer, std::size_t n, std::size_t inner,
              bool inverse);

bool is_pow2(std::size_t n);

}  // namespace psqm
