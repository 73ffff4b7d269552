#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ngpc/audio.hpp"

namespace ngpc {

/// Framing / window / FFT parameters for one analysis-modification-synthesis
/// pass. Defaults: 96-sample frames with 50% overlap at 8 kHz, zero-padded
/// to a 256-point transform.
struct AmsConfig {
    int frame_len = 96;
    int hop = 48;
    int fft_size = 256;
    int sample_rate = 8000;

    /// Throws std::invalid_argument unless 0 < hop <= frame_len <= fft_size
    /// and sample_rate > 0.
    void validate() const;
};

struct Frame {
    std::vector<double> samples;
    int index = 0;
};

/// One frame's N-point complex spectrum. When produced from a real frame,
/// bins[k] == conj(bins[N-k]) up to floating-point noise.
struct ComplexSpectrum {
    std::vector<std::complex<double>> bins;
    int index = 0;
};

/// Periodic (DFT-even) Hamming window: w[n] = 0.54 - 0.46*cos(2*pi*n/len).
std::vector<double> hamming_periodic(int len);

/// Slice a signal into hop-spaced frames; a trailing remainder becomes one
/// zero-padded tail frame. Throws if the signal is shorter than frame_len.
std::vector<Frame> segment_signal(const AudioSignal& signal, const AmsConfig& config);

Frame apply_window(const Frame& frame, const AmsConfig& config);

/// Zero-pad to fft_size and transform (forward-unnormalized convention).
ComplexSpectrum forward_spectrum(const Frame& frame, const AmsConfig& config);

/// 1/N-normalized inverse transform; keeps the real part of the first
/// frame_len samples. If imag_residue is non-null it receives the largest
/// absolute imaginary component discarded.
Frame inverse_frame(const ComplexSpectrum& spectrum, const AmsConfig& config,
                    double* imag_residue = nullptr);

/// Sum frames at t*hop offsets and divide by the summed window envelope
/// (floored at 1e-8) so that gain-1 analysis-synthesis is identity in the
/// interior. Output truncated to total_len.
AudioSignal overlap_add(const std::vector<Frame>& frames, const AmsConfig& config,
                        std::size_t total_len);

} // namespace ngpc
