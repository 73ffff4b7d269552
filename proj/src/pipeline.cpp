#include "ngpc/pipeline.hpp"

#include <cmath>
#include <stdexcept>

namespace ngpc {

AudioSignal enhance_stage1(const AudioSignal& noisy, const PipelineConfig& config) {
    config.stage1.validate();
    const std::vector<Frame> frames = segment_signal(noisy, config.stage1);
    const std::size_t n_init = static_cast<std::size_t>(config.noise.init_frames);
    if (frames.size() < n_init + 1)
        throw std::invalid_argument("signal too short for noise initialization");

    std::vector<ComplexSpectrum> spectra;
    spectra.reserve(frames.size());
    for (const auto& f : frames)
        spectra.push_back(forward_spectrum(apply_window(f, config.stage1), config.stage1));

    NoiseState state = init_noise(std::span(spectra.data(), n_init), config.noise);
    const LowBand band = LowBand::make(config.stage1.fft_size, config.stage1.sample_rate);

    GainContext ctx = config.gain;
    ctx.prev_gain.clear();
    ctx.prev_beta.clear();

    std::vector<Frame> out_frames;
    out_frames.reserve(frames.size());
    for (std::size_t t = 0; t < spectra.size(); ++t) {
        const ComplexSpectrum& y = spectra[t];
        if (t >= n_init &&
            classify_silence(y, state, config.noise.silence_threshold_db))
            update_silence_noise(state, y);

        const double alpha = tracking_factor(y, state, band, config.noise.alpha_min,
                                             config.noise.alpha_max);
        const std::vector<double> noise_mag = current_noise(state, alpha);

        std::vector<double> y_mag(y.bins.size());
        for (std::size_t k = 0; k < y.bins.size(); ++k) y_mag[k] = std::abs(y.bins[k]);

        const std::vector<double> beta = posterior_snr(y_mag, noise_mag);
        const std::vector<double> sigma = a_priori_snr(beta, ctx);
        const std::vector<double> g = ga_gain(beta, sigma, ctx);

        const ComplexSpectrum z = apply_gain(y, g);
        ctx.prev_gain = g;
        ctx.prev_beta = beta;

        out_frames.push_back(inverse_frame(z, config.stage1));
    }
    return overlap_add(out_frames, config.stage1, noisy.samples.size());
}

AudioSignal enhance_stage2(const AudioSignal& intermediate,
                           const PipelineConfig& config) {
    config.stage2.validate();
    const std::vector<Frame> frames = segment_signal(intermediate, config.stage2);
    const std::vector<double> psi = antisymmetry_mask(config.stage2.fft_size);

    std::vector<Frame> out_frames;
    out_frames.reserve(frames.size());
    for (const auto& f : frames) {
        const ComplexSpectrum z =
            forward_spectrum(apply_window(f, config.stage2), config.stage2);
        const double dhat = rms_noise_scalar(z);
        const std::vector<double> phi = compensation_function(psi, dhat, config.psc);
        const ComplexSpectrum compensated = compensate_phase(z, phi);
        out_frames.push_back(inverse_frame(compensated, config.stage2));
    }
    return overlap_add(out_frames, config.stage2, intermediate.samples.size());
}

AudioSignal enhance(const AudioSignal& noisy, const PipelineConfig& config) {
    return enhance_stage2(enhance_stage1(noisy, config), config);
}

} // namespace ngpc
