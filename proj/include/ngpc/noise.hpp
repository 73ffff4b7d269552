#pragma once

#include <span>
#include <vector>

#include "ngpc/ams.hpp"

namespace ngpc {

/// Knobs for the recursive silence-frame noise estimate and the low-band
/// tracking factor.
struct NoiseParams {
    double forgetting = 0.9;          // recursion weight on silence frames
    int init_frames = 6;              // initial frames averaged into the base estimate
    double silence_threshold_db = 3.0;
    double alpha_min = 0.1;
    double alpha_max = 10.0;
};

/// Recursive noise magnitude estimate, refreshed only on silence frames.
struct NoiseState {
    std::vector<double> base_magnitude;
    int last_silence_index = 0;
    double forgetting = 0.9;
    int init_frames = 6;
    bool initialized = false;
};

/// Bin indices whose center frequency falls in the speech-free low band
/// (0..50 Hz by default). Always contains k = 0.
struct LowBand {
    std::vector<int> bin_indices;
    static LowBand make(int fft_size, int sample_rate, double hz_high = 50.0);
};

/// Average the magnitudes of the first init_frames spectra into a fresh
/// state. Throws if fewer spectra are supplied.
NoiseState init_noise(std::span<const ComplexSpectrum> initial_spectra,
                      const NoiseParams& params);

/// Energy-ratio silence detector: silence when the frame's energy is less
/// than threshold_db above the current base estimate's energy. An all-zero
/// base estimate classifies as speech.
bool classify_silence(const ComplexSpectrum& spectrum, const NoiseState& state,
                      double threshold_db);

/// base <- forgetting*base + (1 - forgetting)*|Y|, bin-wise.
void update_silence_noise(NoiseState& state, const ComplexSpectrum& spectrum);

/// Ratio of the spectrum's low-band magnitude sum to the base estimate's,
/// clamped to [alpha_min, alpha_max]. Near-zero denominator returns 1.
double tracking_factor(const ComplexSpectrum& spectrum, const NoiseState& state,
                       const LowBand& band, double alpha_min = 0.1,
                       double alpha_max = 10.0);

/// Per-frame noise magnitude: alpha * base_magnitude.
std::vector<double> current_noise(const NoiseState& state, double alpha);

} // namespace ngpc
