#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "ngpc/metrics.hpp"

using namespace ngpc;

namespace {

AudioSignal white_noise(std::size_t len, double amplitude, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, amplitude);
    AudioSignal sig;
    sig.samples.resize(len);
    for (auto& s : sig.samples) s = gauss(rng);
    return sig;
}

AudioSignal sine(std::size_t len, double freq_hz, double amplitude = 1.0,
                 int sr = 8000) {
    AudioSignal sig;
    sig.sample_rate = sr;
    sig.samples.resize(len);
    for (std::size_t n = 0; n < len; ++n)
        sig.samples[n] =
            amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * n / sr);
    return sig;
}

double measured_snr_db(const AudioSignal& clean, const AudioSignal& noisy) {
    double sig = 0.0, noise = 0.0;
    for (std::size_t n = 0; n < clean.samples.size(); ++n) {
        sig += clean.samples[n] * clean.samples[n];
        const double d = noisy.samples[n] - clean.samples[n];
        noise += d * d;
    }
    return 10.0 * std::log10(sig / noise);
}

} // namespace

TEST_CASE("mix_at_snr gain solutions") {
    AudioSignal clean = sine(4096, 440.0, 0.5);
    AudioSignal noise = white_noise(4096, 0.5, 1);

    // rescale the noise to exactly the clean power so g has a closed form
    double pc = 0.0, pn = 0.0;
    for (std::size_t n = 0; n < 4096; ++n) {
        pc += clean.samples[n] * clean.samples[n];
        pn += noise.samples[n] * noise.samples[n];
    }
    for (auto& s : noise.samples) s *= std::sqrt(pc / pn);

    SUBCASE("0 dB keeps the noise as-is") {
        AudioSignal noisy = mix_at_snr(clean, noise, 0.0);
        for (std::size_t n = 0; n < 64; ++n)
            CHECK(noisy.samples[n] ==
                  doctest::Approx(clean.samples[n] + noise.samples[n]).epsilon(1e-9));
    }
    SUBCASE("10 dB scales by sqrt(0.1)") {
        AudioSignal noisy = mix_at_snr(clean, noise, 10.0);
        const double g = std::sqrt(0.1);
        for (std::size_t n = 0; n < 64; ++n)
            CHECK(noisy.samples[n] ==
                  doctest::Approx(clean.samples[n] + g * noise.samples[n])
                      .epsilon(1e-9));
    }
    SUBCASE("-20 dB scales by 10") {
        AudioSignal noisy = mix_at_snr(clean, noise, -20.0);
        for (std::size_t n = 0; n < 64; ++n)
            CHECK(noisy.samples[n] ==
                  doctest::Approx(clean.samples[n] + 10.0 * noise.samples[n])
                      .epsilon(1e-9));
    }
    SUBCASE("measured SNR equals the target") {
        for (double target : {-20.0, -10.0, 0.0, 10.0}) {
            AudioSignal noisy = mix_at_snr(clean, noise, target);
            CHECK(std::abs(measured_snr_db(clean, noisy) - target) < 1e-9);
        }
    }
    SUBCASE("zero-power inputs are rejected") {
        AudioSignal silence;
        silence.samples.assign(4096, 0.0);
        CHECK_THROWS_AS(mix_at_snr(silence, noise, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(mix_at_snr(clean, silence, 0.0), std::invalid_argument);
    }
    SUBCASE("short noise is rejected") {
        AudioSignal short_noise = white_noise(100, 0.5, 2);
        CHECK_THROWS_AS(mix_at_snr(clean, short_noise, 0.0), std::invalid_argument);
    }
}

TEST_CASE("segmental SNR") {
    SUBCASE("enhanced == noisy gives zero improvement") {
        AudioSignal clean = sine(2048, 300.0);
        AudioSignal noisy = white_noise(2048, 0.3, 3);
        for (std::size_t n = 0; n < 2048; ++n) noisy.samples[n] += clean.samples[n];
        CHECK(segmental_snr_improvement(clean, noisy, noisy) == 0.0);
    }
    SUBCASE("single frame closed form") {
        AudioSignal clean = sine(256, 1000.0);
        AudioSignal noisy = clean;
        for (auto& s : noisy.samples) s *= 1.1; // error = 0.1 * clean
        int frames = 0;
        const double snr = segmental_snr(clean, noisy, 256, &frames);
        CHECK(frames == 1);
        CHECK(snr == doctest::Approx(20.0).epsilon(1e-9));
    }
    SUBCASE("perfect enhancement clamps at 35 dB") {
        // two frames of clean reference plus visible noise
        AudioSignal clean = sine(512, 500.0);
        AudioSignal noisy = clean;
        std::mt19937 rng(4);
        std::normal_distribution<double> gauss(0.0, 0.2);
        for (auto& s : noisy.samples) s += gauss(rng);

        const double seg_noisy = segmental_snr(clean, noisy, 256);
        const double improvement = segmental_snr_improvement(clean, noisy, clean, 256);
        CHECK(improvement == doctest::Approx(35.0 - seg_noisy).epsilon(1e-9));
        CHECK(improvement > 0.0);
    }
    SUBCASE("silent reference frames are skipped") {
        AudioSignal clean;
        clean.samples.assign(512, 0.0);
        for (std::size_t n = 256; n < 512; ++n)
            clean.samples[n] = std::sin(2.0 * std::numbers::pi * n / 32.0);
        AudioSignal test = clean;
        for (auto& s : test.samples) s += 0.01;
        int frames = 0;
        segmental_snr(clean, test, 256, &frames);
        CHECK(frames == 1);
    }
    SUBCASE("length mismatch") {
        AudioSignal a = sine(512, 500.0);
        AudioSignal b = sine(511, 500.0);
        CHECK_THROWS_AS(segmental_snr(a, b), std::invalid_argument);
    }
}

TEST_CASE("overall SNR") {
    AudioSignal clean = sine(4096, 700.0);
    AudioSignal noisy = clean;
    std::mt19937 rng(5);
    std::normal_distribution<double> gauss(0.0, 0.1);
    for (auto& s : noisy.samples) s += gauss(rng);

    SUBCASE("enhanced == noisy gives zero") {
        CHECK(overall_snr_improvement(clean, noisy, noisy) == 0.0);
    }
    SUBCASE("halving the residual power gives 10*log10(2)") {
        AudioSignal halved = clean;
        const double g = std::sqrt(0.5);
        for (std::size_t n = 0; n < 4096; ++n)
            halved.samples[n] += g * (noisy.samples[n] - clean.samples[n]);
        CHECK(overall_snr_improvement(clean, noisy, halved) ==
              doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-9));
    }
    SUBCASE("zero residual caps at 100 dB") {
        const double improvement = overall_snr_improvement(clean, noisy, clean);
        CHECK(improvement == doctest::Approx(100.0 - overall_snr(clean, noisy)));
    }
}

TEST_CASE("metric antisymmetry under swapping noisy and enhanced") {
    AudioSignal clean = sine(4096, 600.0);
    AudioSignal noisy = clean;
    AudioSignal enhanced = clean;
    std::mt19937 rng(6);
    std::normal_distribution<double> big(0.0, 0.3), small(0.0, 0.05);
    for (auto& s : noisy.samples) s += big(rng);
    for (auto& s : enhanced.samples) s += small(rng);

    CHECK(segmental_snr_improvement(clean, noisy, enhanced) ==
          doctest::Approx(-segmental_snr_improvement(clean, enhanced, noisy))
              .epsilon(1e-12));
    CHECK(overall_snr_improvement(clean, noisy, enhanced) ==
          doctest::Approx(-overall_snr_improvement(clean, enhanced, noisy))
              .epsilon(1e-12));
}

TEST_CASE("spectrogram") {
    AmsConfig cfg;

    SUBCASE("1 kHz tone dominates bin 32") {
        AudioSignal tone = sine(4096, 1000.0, 0.8);
        const auto mat = compute_spectrogram(tone, cfg);
        CHECK(mat.bin_hz[32] == doctest::Approx(1000.0));
        for (const auto& row : mat.rows) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < row.size(); ++k)
                if (row[k] > row[best]) best = k;
            CHECK(best == 32);
        }
    }
    SUBCASE("silence sits at the floor") {
        AudioSignal silence;
        silence.samples.assign(1024, 0.0);
        const auto mat = compute_spectrogram(silence, cfg);
        for (const auto& row : mat.rows)
            for (double v : row) CHECK(v == -120.0);
    }
    SUBCASE("white noise spectrum is roughly flat") {
        // single-bin dB values have a long Rayleigh tail; average over time
        // before asserting flatness
        AudioSignal noise = white_noise(8192, 0.3, 7);
        const auto mat = compute_spectrogram(noise, cfg);
        std::vector<double> bin_avg(mat.bin_hz.size(), 0.0);
        for (const auto& row : mat.rows)
            for (std::size_t k = 0; k < row.size(); ++k) bin_avg[k] += row[k];
        double mean = 0.0;
        for (auto& v : bin_avg) {
            v /= static_cast<double>(mat.rows.size());
            mean += v;
        }
        mean /= static_cast<double>(bin_avg.size());
        for (double v : bin_avg) CHECK(std::abs(v - mean) < 15.0);
    }
    SUBCASE("CSV export text round trip") {
        const std::string path =
            (std::filesystem::temp_directory_path() / "ngpc_spec.csv").string();
        AudioSignal sig = white_noise(2048, 0.3, 8);
        spectrogram_export(sig, cfg, path);
        const auto mat = compute_spectrogram(sig, cfg);

        std::ifstream in(path);
        REQUIRE(in.good());
        std::string line;
        std::getline(in, line); // header
        std::size_t t = 0;
        char buf[64];
        while (std::getline(in, line)) {
            std::stringstream ss(line);
            std::string cell;
            std::size_t k = 0;
            while (std::getline(ss, cell, ',')) {
                const double parsed = std::stod(cell);
                std::snprintf(buf, sizeof buf, "%.9g", mat.rows[t][k]);
                CHECK(cell == buf);
                std::snprintf(buf, sizeof buf, "%.9g", parsed);
                CHECK(cell == buf);
                ++k;
            }
            CHECK(k == mat.rows[t].size());
            ++t;
        }
        CHECK(t == mat.rows.size());
    }
}
