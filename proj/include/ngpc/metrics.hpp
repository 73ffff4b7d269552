#pragma once

#include <string>
#include <vector>

#include "ngpc/ams.hpp"
#include "ngpc/audio.hpp"

namespace ngpc {

struct MetricReport {
    double snrseg_improvement_db = 0.0;
    double overall_snr_improvement_db = 0.0;
    int frames_scored = 0;
};

/// Frame-wise magnitude spectrogram, non-redundant half, in dB
/// (20*log10, floored at -120 dB). One row per frame.
struct SpectrogramMatrix {
    std::vector<double> bin_hz;
    std::vector<std::vector<double>> rows;
};

/// Scale the noise so that 10*log10(P_clean / P_scaled_noise) == snr_db over
/// the clean signal's length, then add. The noise must be at least as long
/// as the clean signal; it is truncated from offset 0.
AudioSignal mix_at_snr(const AudioSignal& clean, const AudioSignal& noise,
                       double snr_db);

/// Mean of per-frame SNRs 10*log10(sum clean^2 / sum (clean-test)^2) over
/// non-overlapping frames, each clamped to [-10, 35] dB; frames whose clean
/// energy is below 1e-10 are skipped. frames_scored receives the number of
/// frames that contributed.
double segmental_snr(const AudioSignal& clean, const AudioSignal& test,
                     int frame_len = 256, int* frames_scored = nullptr);

/// Whole-signal SNR, no clamping; returns 100 dB when the residual power is
/// at or below 1e-20.
double overall_snr(const AudioSignal& clean, const AudioSignal& test);

double segmental_snr_improvement(const AudioSignal& clean, const AudioSignal& noisy,
                                 const AudioSignal& enhanced, int frame_len = 256,
                                 int* frames_scored = nullptr);

double overall_snr_improvement(const AudioSignal& clean, const AudioSignal& noisy,
                               const AudioSignal& enhanced);

MetricReport score(const AudioSignal& clean, const AudioSignal& noisy,
                   const AudioSignal& enhanced, int frame_len = 256);

SpectrogramMatrix compute_spectrogram(const AudioSignal& signal,
                                      const AmsConfig& config);

/// CSV export: header row of bin center frequencies in Hz, one row per
/// frame, values in dB at 9 significant digits.
void spectrogram_export(const AudioSignal& signal, const AmsConfig& config,
                        const std::string& path);

} // namespace ngpc
