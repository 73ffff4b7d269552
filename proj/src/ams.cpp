#include "ngpc/ams.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ngpc/fft.hpp"

namespace ngpc {

void AmsConfig::validate() const {
    if (hop <= 0 || frame_len < hop || fft_size < frame_len)
        throw std::invalid_argument("AmsConfig: need 0 < hop <= frame_len <= fft_size");
    if (sample_rate <= 0)
        throw std::invalid_argument("AmsConfig: sample_rate must be positive");
}

std::vector<double> hamming_periodic(int len) {
    std::vector<double> w(static_cast<std::size_t>(len));
    for (int n = 0; n < len; ++n)
        w[static_cast<std::size_t>(n)] =
            0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * n / len);
    return w;
}

std::vector<Frame> segment_signal(const AudioSignal& signal, const AmsConfig& config) {
    config.validate();
    const std::size_t len = signal.samples.size();
    const std::size_t flen = static_cast<std::size_t>(config.frame_len);
    const std::size_t hop = static_cast<std::size_t>(config.hop);
    if (len < flen)
        throw std::invalid_argument("signal too short");

    const std::size_t full = (len - flen) / hop + 1;
    const bool tail = (len - flen) % hop != 0;

    std::vector<Frame> frames;
    frames.reserve(full + (tail ? 1u : 0u));
    for (std::size_t t = 0; t < full + (tail ? 1u : 0u); ++t) {
        Frame f;
        f.index = static_cast<int>(t);
        f.samples.assign(flen, 0.0);
        const std::size_t start = t * hop;
        const std::size_t avail = std::min(flen, len - start);
        std::copy_n(signal.samples.begin() + static_cast<std::ptrdiff_t>(start),
                    avail, f.samples.begin());
        frames.push_back(std::move(f));
    }
    return frames;
}

Frame apply_window(const Frame& frame, const AmsConfig& config) {
    if (frame.samples.size() != static_cast<std::size_t>(config.frame_len))
        throw std::invalid_argument("frame length does not match config");
    const std::vector<double> w = hamming_periodic(config.frame_len);
    Frame out = frame;
    for (std::size_t n = 0; n < out.samples.size(); ++n)
        out.samples[n] *= w[n];
    return out;
}

ComplexSpectrum forward_spectrum(const Frame& frame, const AmsConfig& config) {
    config.validate();
    ComplexSpectrum spec;
    spec.index = frame.index;
    spec.bins.assign(static_cast<std::size_t>(config.fft_size), {0.0, 0.0});
    for (std::size_t n = 0; n < frame.samples.size(); ++n)
        spec.bins[n] = {frame.samples[n], 0.0};
    fft_forward(spec.bins);
    return spec;
}

Frame inverse_frame(const ComplexSpectrum& spectrum, const AmsConfig& config,
                    double* imag_residue) {
    std::vector<std::complex<double>> time = spectrum.bins;
    fft_inverse(time);

    if (imag_residue) {
        double worst = 0.0;
        for (const auto& v : time) worst = std::max(worst, std::abs(v.imag()));
        *imag_residue = worst;
    }

    Frame out;
    out.index = spectrum.index;
    const std::size_t keep =
        std::min<std::size_t>(static_cast<std::size_t>(config.frame_len), time.size());
    out.samples.resize(static_cast<std::size_t>(config.frame_len), 0.0);
    for (std::size_t n = 0; n < keep; ++n) out.samples[n] = time[n].real();
    return out;
}

AudioSignal overlap_add(const std::vector<Frame>& frames, const AmsConfig& config,
                        std::size_t total_len) {
    config.validate();
    if (frames.empty())
        throw std::invalid_argument("overlap_add: empty frame sequence");

    const std::size_t flen = static_cast<std::size_t>(config.frame_len);
    const std::size_t hop = static_cast<std::size_t>(config.hop);
    const std::size_t span = (frames.size() - 1) * hop + flen;

    std::vector<double> acc(span, 0.0);
    std::vector<double> env(span, 0.0);
    const std::vector<double> w = hamming_periodic(config.frame_len);

    for (std::size_t t = 0; t < frames.size(); ++t) {
        const std::size_t off = t * hop;
        for (std::size_t n = 0; n < flen; ++n) {
            acc[off + n] += frames[t].samples[n];
            env[off + n] += w[n];
        }
    }

    AudioSignal out;
    out.sample_rate = config.sample_rate;
    out.samples.assign(total_len, 0.0);
    const std::size_t keep = std::min(total_len, span);
    for (std::size_t n = 0; n < keep; ++n)
        out.samples[n] = acc[n] / std::max(env[n], 1e-8);
    return out;
}

} // namespace ngpc
