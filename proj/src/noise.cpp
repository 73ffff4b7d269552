#include "ngpc/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ngpc {

LowBand LowBand::make(int fft_size, int sample_rate, double hz_high) {
    LowBand band;
    for (int k = 0; k < fft_size; ++k) {
        const double hz = static_cast<double>(k) * sample_rate / fft_size;
        if (hz <= hz_high)
            band.bin_indices.push_back(k);
        else
            break;
    }
    return band;
}

NoiseState init_noise(std::span<const ComplexSpectrum> initial_spectra,
                      const NoiseParams& params) {
    if (params.init_frames < 1)
        throw std::invalid_argument("init_frames must be >= 1");
    if (initial_spectra.size() < static_cast<std::size_t>(params.init_frames))
        throw std::invalid_argument("insufficient initialization frames");
    if (!(params.forgetting > 0.0 && params.forgetting < 1.0))
        throw std::invalid_argument("forgetting factor must be in (0,1)");

    NoiseState state;
    state.forgetting = params.forgetting;
    state.init_frames = params.init_frames;
    const std::size_t bins = initial_spectra[0].bins.size();
    state.base_magnitude.assign(bins, 0.0);
    for (int t = 0; t < params.init_frames; ++t) {
        const auto& spec = initial_spectra[static_cast<std::size_t>(t)];
        if (spec.bins.size() != bins)
            throw std::invalid_argument("initialization spectra differ in size");
        for (std::size_t k = 0; k < bins; ++k)
            state.base_magnitude[k] += std::abs(spec.bins[k]);
    }
    for (auto& m : state.base_magnitude) m /= params.init_frames;
    state.last_silence_index = params.init_frames - 1;
    state.initialized = true;
    return state;
}

bool classify_silence(const ComplexSpectrum& spectrum, const NoiseState& state,
                      double threshold_db) {
    if (!state.initialized)
        throw std::logic_error("noise state not initialized");
    double frame_energy = 0.0;
    for (const auto& b : spectrum.bins) frame_energy += std::norm(b);
    double base_energy = 0.0;
    for (double m : state.base_magnitude) base_energy += m * m;

    if (base_energy <= 0.0) return false;       // unknown floor: assume speech
    if (frame_energy <= 0.0) return true;       // ratio -inf
    const double ratio_db = 10.0 * std::log10(frame_energy / base_energy);
    return ratio_db < threshold_db;
}

void update_silence_noise(NoiseState& state, const ComplexSpectrum& spectrum) {
    if (!state.initialized)
        throw std::logic_error("noise state not initialized");
    if (spectrum.bins.size() != state.base_magnitude.size())
        throw std::invalid_argument("spectrum size does not match noise state");
    const double nu = state.forgetting;
    for (std::size_t k = 0; k < state.base_magnitude.size(); ++k)
        state.base_magnitude[k] =
            nu * state.base_magnitude[k] + (1.0 - nu) * std::abs(spectrum.bins[k]);
    state.last_silence_index = spectrum.index;
}

double tracking_factor(const ComplexSpectrum& spectrum, const NoiseState& state,
                       const LowBand& band, double alpha_min, double alpha_max) {
    if (!state.initialized)
        throw std::logic_error("noise state not initialized");
    double num = 0.0;
    double den = 0.0;
    for (int k : band.bin_indices) {
        num += std::abs(spectrum.bins[static_cast<std::size_t>(k)]);
        den += state.base_magnitude[static_cast<std::size_t>(k)];
    }
    if (den < 1e-12) return 1.0;
    return std::clamp(num / den, alpha_min, alpha_max);
}

std::vector<double> current_noise(const NoiseState& state, double alpha) {
    if (!state.initialized)
        throw std::logic_error("noise state not initialized");
    std::vector<double> noise = state.base_magnitude;
    for (auto& m : noise) m *= alpha;
    return noise;
}

} // namespace ngpc
