#include "ngpc/phase.hpp"

#include <cmath>
#include <stdexcept>

namespace ngpc {

std::vector<double> antisymmetry_mask(int fft_size) {
    if (fft_size < 2)
        throw std::invalid_argument("antisymmetry_mask: fft_size must be >= 2");
    std::vector<double> psi(static_cast<std::size_t>(fft_size), 0.0);
    for (int k = 1; k < fft_size; ++k) {
        if (2 * k < fft_size)
            psi[static_cast<std::size_t>(k)] = 1.0;
        else if (2 * k > fft_size)
            psi[static_cast<std::size_t>(k)] = -1.0;
        // k == N/2 stays 0 (non-conjugate bin)
    }
    return psi;
}

double rms_noise_scalar(const ComplexSpectrum& z) {
    if (z.bins.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& b : z.bins) acc += std::norm(b);
    return std::sqrt(acc / static_cast<double>(z.bins.size()));
}

std::vector<double> compensation_function(const std::vector<double>& psi,
                                          double dhat, const PscConfig& config) {
    if (config.lambda < 0.0)
        throw std::invalid_argument("lambda must be non-negative");
    std::vector<double> phi(psi.size());
    for (std::size_t k = 0; k < psi.size(); ++k)
        phi[k] = config.lambda * psi[k] * dhat;
    return phi;
}

ComplexSpectrum compensate_phase(const ComplexSpectrum& z,
                                 const std::vector<double>& phi) {
    if (phi.size() != z.bins.size())
        throw std::invalid_argument("compensate_phase: length mismatch");
    ComplexSpectrum out;
    out.index = z.index;
    out.bins.resize(z.bins.size());
    for (std::size_t k = 0; k < z.bins.size(); ++k) {
        const std::complex<double> shifted = z.bins[k] + phi[k];
        out.bins[k] = std::polar(std::abs(z.bins[k]), std::arg(shifted));
    }
    return out;
}

} // namespace ngpc
