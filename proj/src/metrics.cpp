#include "ngpc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ngpc {
namespace {

double mean_power(const std::vector<double>& x, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) acc += x[i] * x[i];
    return acc / static_cast<double>(len);
}

void require_same_length(const AudioSignal& a, const AudioSignal& b) {
    if (a.samples.size() != b.samples.size())
        throw std::invalid_argument("signal length mismatch");
}

} // namespace

AudioSignal mix_at_snr(const AudioSignal& clean, const AudioSignal& noise,
                       double snr_db) {
    if (clean.sample_rate != noise.sample_rate)
        throw std::invalid_argument("mix_at_snr: sample rate mismatch");
    if (noise.samples.size() < clean.samples.size())
        throw std::invalid_argument("mix_at_snr: noise shorter than clean signal");

    const std::size_t len = clean.samples.size();
    const double p_clean = mean_power(clean.samples, len);
    const double p_noise = mean_power(noise.samples, len);
    if (p_clean <= 0.0 || p_noise <= 0.0)
        throw std::invalid_argument("mix_at_snr: zero-power input");

    // 10*log10(p_clean / (g^2 * p_noise)) == snr_db
    const double g = std::sqrt(p_clean / (p_noise * std::pow(10.0, snr_db / 10.0)));

    AudioSignal out;
    out.sample_rate = clean.sample_rate;
    out.samples.resize(len);
    for (std::size_t i = 0; i < len; ++i)
        out.samples[i] = clean.samples[i] + g * noise.samples[i];
    return out;
}

double segmental_snr(const AudioSignal& clean, const AudioSignal& test,
                     int frame_len, int* frames_scored) {
    require_same_length(clean, test);
    if (frame_len <= 0)
        throw std::invalid_argument("segmental_snr: frame_len must be positive");

    const std::size_t flen = static_cast<std::size_t>(frame_len);
    const std::size_t n_frames = clean.samples.size() / flen;
    double acc = 0.0;
    int scored = 0;
    for (std::size_t t = 0; t < n_frames; ++t) {
        double sig = 0.0, err = 0.0;
        for (std::size_t n = t * flen; n < (t + 1) * flen; ++n) {
            const double c = clean.samples[n];
            const double d = c - test.samples[n];
            sig += c * c;
            err += d * d;
        }
        if (sig < 1e-10) continue; // silent reference frame
        double snr = err > 0.0 ? 10.0 * std::log10(sig / err) : 35.0;
        snr = std::clamp(snr, -10.0, 35.0);
        acc += snr;
        ++scored;
    }
    if (frames_scored) *frames_scored = scored;
    if (scored == 0)
        throw std::invalid_argument("segmental_snr: no scorable frames");
    return acc / scored;
}

double overall_snr(const AudioSignal& clean, const AudioSignal& test) {
    require_same_length(clean, test);
    double sig = 0.0, err = 0.0;
    for (std::size_t n = 0; n < clean.samples.size(); ++n) {
        const double c = clean.samples[n];
        const double d = c - test.samples[n];
        sig += c * c;
        err += d * d;
    }
    if (err <= 1e-20) return 100.0;
    return 10.0 * std::log10(sig / err);
}

double segmental_snr_improvement(const AudioSignal& clean, const AudioSignal& noisy,
                                 const AudioSignal& enhanced, int frame_len,
                                 int* frames_scored) {
    const double seg_enh = segmental_snr(clean, enhanced, frame_len, frames_scored);
    const double seg_noisy = segmental_snr(clean, noisy, frame_len);
    return seg_enh - seg_noisy;
}

double overall_snr_improvement(const AudioSignal& clean, const AudioSignal& noisy,
                               const AudioSignal& enhanced) {
    return overall_snr(clean, enhanced) - overall_snr(clean, noisy);
}

MetricReport score(const AudioSignal& clean, const AudioSignal& noisy,
                   const AudioSignal& enhanced, int frame_len) {
    MetricReport report;
    report.snrseg_improvement_db = segmental_snr_improvement(
        clean, noisy, enhanced, frame_len, &report.frames_scored);
    report.overall_snr_improvement_db =
        overall_snr_improvement(clean, noisy, enhanced);
    return report;
}

SpectrogramMatrix compute_spectrogram(const AudioSignal& signal,
                                      const AmsConfig& config) {
    config.validate();
    SpectrogramMatrix mat;
    const int half = config.fft_size / 2 + 1; // non-redundant half
    mat.bin_hz.resize(static_cast<std::size_t>(half));
    for (int k = 0; k < half; ++k)
        mat.bin_hz[static_cast<std::size_t>(k)] =
            static_cast<double>(k) * config.sample_rate / config.fft_size;

    const std::vector<Frame> frames = segment_signal(signal, config);
    mat.rows.reserve(frames.size());
    for (const auto& f : frames) {
        const ComplexSpectrum spec =
            forward_spectrum(apply_window(f, config), config);
        std::vector<double> row(static_cast<std::size_t>(half));
        for (int k = 0; k < half; ++k) {
            const double mag = std::abs(spec.bins[static_cast<std::size_t>(k)]);
            row[static_cast<std::size_t>(k)] =
                mag > 0.0 ? std::max(20.0 * std::log10(mag), -120.0) : -120.0;
        }
        mat.rows.push_back(std::move(row));
    }
    return mat;
}

void spectrogram_export(const AudioSignal& signal, const AmsConfig& config,
                        const std::string& path) {
    const SpectrogramMatrix mat = compute_spectrogram(signal, config);
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);

    char buf[64];
    for (std::size_t k = 0; k < mat.bin_hz.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.9g", mat.bin_hz[k]);
        out << (k ? "," : "") << buf;
    }
    out << '\n';
    for (const auto& row : mat.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.9g", row[k]);
            out << (k ? "," : "") << buf;
        }
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

} // namespace ngpc
