#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngpc/metrics.hpp"
#include "ngpc/pipeline.hpp"
#include "ngpc/wav.hpp"

namespace {

// Identity below the knee, smooth saturation above, bounded by 1. Applied
// only at the file-writing boundary.
double soft_clip(double x, double knee = 0.9) {
    const double mag = std::abs(x);
    if (mag <= knee) return x;
    const double y = knee + (1.0 - knee) * std::tanh((mag - knee) / (1.0 - knee));
    return std::copysign(y, x);
}

struct EnhanceOptions {
    std::string in_path;
    std::string out_path;
    std::string report_path;
    ngpc::PipelineConfig config;
};

void check_finite(const ngpc::AudioSignal& sig, const std::string& what) {
    for (double s : sig.samples)
        if (!std::isfinite(s))
            throw std::domain_error(what + " contains non-finite samples");
}

int run_enhance(const EnhanceOptions& opts) {
    const ngpc::AudioSignal noisy = ngpc::read_wav(opts.in_path);
    ngpc::AudioSignal enhanced = ngpc::enhance(noisy, opts.config);
    check_finite(enhanced, "enhanced output");

    for (auto& s : enhanced.samples) s = soft_clip(s);
    ngpc::write_wav(enhanced, opts.out_path, ngpc::WavFormat::pcm16);

    if (!opts.report_path.empty()) {
        nlohmann::json j{
            {"input", opts.in_path},
            {"output", opts.out_path},
            {"samples", enhanced.samples.size()},
            {"sample_rate", enhanced.sample_rate},
            {"lambda", opts.config.psc.lambda},
            {"nu", opts.config.noise.forgetting},
            {"init_frames", opts.config.noise.init_frames},
            {"frame", opts.config.stage1.frame_len},
            {"hop", opts.config.stage1.hop},
            {"fft", opts.config.stage1.fft_size},
        };
        std::ofstream out(opts.report_path);
        if (!out)
            throw std::runtime_error("cannot write " + opts.report_path);
        out << j.dump(2) << '\n';
    }
    return 0;
}

struct BatchRow {
    std::string clean;
    std::string noise;
    double snr_db = 0.0;
};

struct BatchResult {
    BatchRow row;
    ngpc::MetricReport report;
};

BatchResult run_batch_row(const BatchRow& row, const ngpc::PipelineConfig& config) {
    const ngpc::AudioSignal clean = ngpc::read_wav(row.clean);
    const ngpc::AudioSignal noise = ngpc::read_wav(row.noise);
    const ngpc::AudioSignal noisy = ngpc::mix_at_snr(clean, noise, row.snr_db);
    const ngpc::AudioSignal enhanced = ngpc::enhance(noisy, config);
    check_finite(enhanced, row.clean);
    return {row, ngpc::score(clean, noisy, enhanced)};
}

int run_batch(const std::string& manifest_path, const ngpc::PipelineConfig& config) {
    std::ifstream in(manifest_path);
    if (!in)
        throw std::runtime_error("cannot open manifest " + manifest_path);

    std::vector<BatchRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        BatchRow row;
        std::string snr;
        if (!std::getline(ss, row.clean, ',') || !std::getline(ss, row.noise, ',') ||
            !std::getline(ss, snr, ','))
            throw std::runtime_error("malformed manifest line: " + line);
        if (row.clean == "clean") continue; // header row
        row.snr_db = std::stod(snr);
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::runtime_error("manifest has no data rows");

    std::vector<std::future<BatchResult>> futures;
    futures.reserve(rows.size());
    for (const auto& row : rows)
        futures.push_back(std::async(std::launch::async, run_batch_row, row, config));

    std::printf("%-28s %-28s %8s %14s %14s\n", "clean", "noise", "snr_db",
                "snrseg_imp_db", "ovl_snr_imp_db");
    for (auto& f : futures) {
        const BatchResult r = f.get();
        std::printf("%-28s %-28s %8.1f %14.3f %14.3f\n", r.row.clean.c_str(),
                    r.row.noise.c_str(), r.row.snr_db,
                    r.report.snrseg_improvement_db,
                    r.report.overall_snr_improvement_db);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-stage speech enhancement (spectral subtraction + phase compensation)"};
    app.require_subcommand(1);

    EnhanceOptions eopts;

    auto* enhance_cmd = app.add_subcommand("enhance", "Enhance a noisy WAV file");
    enhance_cmd->add_option("--in", eopts.in_path, "Input WAV")->required();
    enhance_cmd->add_option("--out", eopts.out_path, "Output WAV")->required();
    enhance_cmd->add_option("--lambda", eopts.config.psc.lambda,
                            "Phase compensation strength");
    enhance_cmd->add_option("--nu", eopts.config.noise.forgetting,
                            "Noise recursion forgetting factor");
    enhance_cmd->add_option("--init-frames", eopts.config.noise.init_frames,
                            "Initial silence frames for noise estimation");
    enhance_cmd->add_option("--silence-db", eopts.config.noise.silence_threshold_db,
                            "Silence classification threshold (dB)");
    int frame = 96, hop = 48, fft = 256;
    enhance_cmd->add_option("--frame", frame, "Frame length (samples)");
    enhance_cmd->add_option("--hop", hop, "Hop size (samples)");
    enhance_cmd->add_option("--fft", fft, "FFT size (samples)");
    enhance_cmd->add_option("--gain-floor", eopts.config.gain.gain_floor,
                            "Minimum spectral gain");
    enhance_cmd->add_option("--gain-cap", eopts.config.gain.gain_cap,
                            "Maximum spectral gain");
    enhance_cmd->add_option("--smoothing", eopts.config.gain.smoothing,
                            "Decision-directed smoothing");
    enhance_cmd->add_option("--report", eopts.report_path, "Write a JSON run report");

    std::string mix_clean, mix_noise, mix_out;
    double mix_snr = 0.0;
    auto* mix_cmd = app.add_subcommand("mix", "Mix noise into clean speech at a target SNR");
    mix_cmd->add_option("--clean", mix_clean, "Clean WAV")->required();
    mix_cmd->add_option("--noise", mix_noise, "Noise WAV")->required();
    mix_cmd->add_option("--snr", mix_snr, "Target SNR (dB)")->required();
    mix_cmd->add_option("--out", mix_out, "Output WAV")->required();

    std::string met_clean, met_noisy, met_enhanced;
    bool met_json = false;
    auto* met_cmd = app.add_subcommand("metrics", "Score enhancement quality");
    met_cmd->add_option("--clean", met_clean, "Clean reference WAV")->required();
    met_cmd->add_option("--noisy", met_noisy, "Noisy WAV")->required();
    met_cmd->add_option("--enhanced", met_enhanced, "Enhanced WAV")->required();
    met_cmd->add_flag("--json", met_json, "Emit JSON");

    std::string spec_in, spec_out;
    int spec_fft = 256, spec_hop = 48;
    auto* spec_cmd = app.add_subcommand("spectrogram", "Export a magnitude spectrogram as CSV");
    spec_cmd->add_option("--in", spec_in, "Input WAV")->required();
    spec_cmd->add_option("--out", spec_out, "Output CSV")->required();
    spec_cmd->add_option("--fft", spec_fft, "FFT size");
    spec_cmd->add_option("--hop", spec_hop, "Hop size");

    std::string manifest;
    auto* batch_cmd = app.add_subcommand("batch", "Run an SNR-sweep experiment from a manifest");
    batch_cmd->add_option("--manifest", manifest, "CSV of clean,noise,snr rows")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*enhance_cmd) {
            eopts.config.stage1.frame_len = frame;
            eopts.config.stage1.hop = hop;
            eopts.config.stage1.fft_size = fft;
            eopts.config.stage2 = eopts.config.stage1;
            return run_enhance(eopts);
        }
        if (*mix_cmd) {
            const ngpc::AudioSignal clean = ngpc::read_wav(mix_clean);
            const ngpc::AudioSignal noise = ngpc::read_wav(mix_noise);
            const ngpc::AudioSignal noisy = ngpc::mix_at_snr(clean, noise, mix_snr);
            ngpc::write_wav(noisy, mix_out, ngpc::WavFormat::float32);
            return 0;
        }
        if (*met_cmd) {
            const ngpc::AudioSignal clean = ngpc::read_wav(met_clean);
            const ngpc::AudioSignal noisy = ngpc::read_wav(met_noisy);
            const ngpc::AudioSignal enhanced = ngpc::read_wav(met_enhanced);
            const ngpc::MetricReport report = ngpc::score(clean, noisy, enhanced);
            if (met_json) {
                nlohmann::json j{
                    {"snrseg_improvement_db", report.snrseg_improvement_db},
                    {"overall_snr_improvement_db", report.overall_snr_improvement_db},
                    {"frames_scored", report.frames_scored},
                };
                std::cout << j.dump(2) << '\n';
            } else {
                std::printf("SNRSeg improvement:      %.4f dB\n",
                            report.snrseg_improvement_db);
                std::printf("Overall SNR improvement: %.4f dB\n",
                            report.overall_snr_improvement_db);
                std::printf("Frames scored:           %d\n", report.frames_scored);
            }
            return 0;
        }
        if (*spec_cmd) {
            const ngpc::AudioSignal sig = ngpc::read_wav(spec_in);
            ngpc::AmsConfig cfg;
            cfg.fft_size = spec_fft;
            cfg.hop = spec_hop;
            cfg.frame_len = std::min(96, spec_fft);
            cfg.hop = std::min(cfg.hop, cfg.frame_len);
            cfg.sample_rate = sig.sample_rate;
            ngpc::spectrogram_export(sig, cfg, spec_out);
            return 0;
        }
        if (*batch_cmd) {
            ngpc::PipelineConfig config;
            return run_batch(manifest, config);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
