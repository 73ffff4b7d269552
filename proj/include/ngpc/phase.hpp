#pragma once

#include <vector>

#include "ngpc/ams.hpp"

namespace ngpc {

struct PscConfig {
    double lambda = 3.74;   // compensation strength; 0 disables the stage
};

/// Anti-symmetric bin weighting: +1 for 0 < k/N < 1/2, -1 for
/// 1/2 < k/N < 1, 0 at the non-conjugate bins k = 0 and k = N/2.
std::vector<double> antisymmetry_mask(int fft_size);

/// Root mean square magnitude across all bins of one spectrum.
double rms_noise_scalar(const ComplexSpectrum& z);

/// Phi[k] = lambda * psi[k] * dhat. Anti-symmetric by construction.
std::vector<double> compensation_function(const std::vector<double>& psi,
                                          double dhat, const PscConfig& config);

/// Keep |Z[k]| but take the phase of Z[k] + Phi[k]. The result is
/// intentionally not conjugate-symmetric; real-part synthesis performs the
/// conjugate summation that cancels low-magnitude bins.
ComplexSpectrum compensate_phase(const ComplexSpectrum& z,
                                 const std::vector<double>& phi);

} // namespace ngpc
