#pragma once

#include <complex>
#include <vector>

namespace ngpc {

/// In-place forward DFT, unnormalized: X[k] = sum_n x[n] e^{-j2*pi*nk/N}.
/// Radix-2 when the size is a power of two, direct evaluation otherwise.
void fft_forward(std::vector<std::complex<double>>& data);

/// In-place inverse DFT with 1/N normalization.
void fft_inverse(std::vector<std::complex<double>>& data);

} // namespace ngpc
