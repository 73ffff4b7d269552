#include "ngpc/gain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ngpc {

std::vector<double> posterior_snr(const std::vector<double>& noisy_mag,
                                  const std::vector<double>& noise_mag) {
    if (noisy_mag.size() != noise_mag.size())
        throw std::invalid_argument("posterior_snr: size mismatch");
    std::vector<double> beta(noisy_mag.size());
    for (std::size_t k = 0; k < beta.size(); ++k) {
        const double den = std::max(noise_mag[k] * noise_mag[k], 1e-12);
        beta[k] = noisy_mag[k] * noisy_mag[k] / den;
    }
    return beta;
}

std::vector<double> a_priori_snr(const std::vector<double>& beta,
                                 const GainContext& ctx) {
    const bool has_memory =
        ctx.prev_gain.size() == beta.size() && ctx.prev_beta.size() == beta.size();
    std::vector<double> sigma(beta.size());
    for (std::size_t k = 0; k < beta.size(); ++k) {
        const double memory =
            has_memory ? ctx.prev_gain[k] * ctx.prev_gain[k] * ctx.prev_beta[k] : 0.0;
        const double instant = std::max(beta[k] - 1.0, 0.0);
        sigma[k] = std::max(ctx.smoothing * memory + (1.0 - ctx.smoothing) * instant,
                            1e-6);
    }
    return sigma;
}

double ga_gain_scalar(double beta, double sigma, const GainContext& ctx) {
    const double b = std::max(beta, 1e-12);
    const double s = std::max(sigma, 1e-12);
    const double cap2 = 1.0 - ctx.cos_clamp_eps;

    const double num_yv = b + 1.0 - s;
    const double num_xv = b - 1.0 - s;
    const double cyv2 = std::min(num_yv * num_yv / (4.0 * b), cap2);
    const double cxv2 = std::min(num_xv * num_xv / (4.0 * s), cap2);

    const double g = std::sqrt((1.0 - cyv2) / (1.0 - cxv2));
    return std::clamp(g, ctx.gain_floor, ctx.gain_cap);
}

std::vector<double> ga_gain(const std::vector<double>& beta,
                            const std::vector<double>& sigma,
                            const GainContext& ctx) {
    if (beta.size() != sigma.size())
        throw std::invalid_argument("ga_gain: size mismatch");
    std::vector<double> g(beta.size());
    for (std::size_t k = 0; k < g.size(); ++k)
        g[k] = ga_gain_scalar(beta[k], sigma[k], ctx);
    return g;
}

ComplexSpectrum apply_gain(const ComplexSpectrum& noisy,
                           const std::vector<double>& gain) {
    const std::size_t n = noisy.bins.size();
    if (gain.size() != n)
        throw std::invalid_argument("apply_gain: gain length mismatch");
    for (std::size_t k = 1; k < n; ++k) {
        const double a = gain[k];
        const double b = gain[n - k];
        const double scale = std::max({std::abs(a), std::abs(b), 1.0});
        if (std::abs(a - b) > 1e-9 * scale)
            throw std::invalid_argument("gain breaks conjugate symmetry");
    }
    ComplexSpectrum out;
    out.index = noisy.index;
    out.bins.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.bins[k] = gain[k] * noisy.bins[k];
    return out;
}

} // namespace ngpc
