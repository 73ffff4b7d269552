#pragma once

#include <vector>

#include "ngpc/ams.hpp"

namespace ngpc {

/// Parameters plus decision-directed memory for the geometric-approach gain.
/// prev_gain / prev_beta are empty before the first frame.
struct GainContext {
    double smoothing = 0.98;   // decision-directed weight on the previous frame
    double gain_floor = 0.05;
    double gain_cap = 1.0;
    double cos_clamp_eps = 1e-6;
    std::vector<double> prev_gain;
    std::vector<double> prev_beta;
};

/// Posterior SNR per bin: |Y|^2 / |V|^2 with the denominator floored at 1e-12.
std::vector<double> posterior_snr(const std::vector<double>& noisy_mag,
                                  const std::vector<double>& noise_mag);

/// Decision-directed a priori SNR:
///   sigma = smoothing * prev_gain^2 * prev_beta + (1 - smoothing) * max(beta - 1, 0),
/// floored at 1e-6.
std::vector<double> a_priori_snr(const std::vector<double>& beta,
                                 const GainContext& ctx);

/// Geometric-approach gain for a single (beta, sigma) pair, clamped to
/// [gain_floor, gain_cap]. Never returns NaN for finite inputs.
double ga_gain_scalar(double beta, double sigma, const GainContext& ctx);

std::vector<double> ga_gain(const std::vector<double>& beta,
                            const std::vector<double>& sigma,
                            const GainContext& ctx);

/// Z[k] = gain[k] * Y[k]; phases untouched. The gain vector must be
/// conjugate-symmetric (gain[k] == gain[N-k]) so the output spectrum stays
/// conjugate-symmetric.
ComplexSpectrum apply_gain(const ComplexSpectrum& noisy,
                           const std::vector<double>& gain);

} // namespace ngpc
