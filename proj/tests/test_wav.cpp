#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include "ngpc/wav.hpp"

using namespace ngpc;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

// Minimal hand-rolled WAV writer for constructing malformed/edge inputs
// without going through the production writer.
void write_raw_wav(const std::string& path, uint16_t format, uint16_t channels,
                   uint32_t rate, uint16_t bits, const std::vector<char>& data) {
    std::ofstream out(path, std::ios::binary);
    auto u32 = [&](uint32_t v) { out.write(reinterpret_cast<char*>(&v), 4); };
    auto u16 = [&](uint16_t v) { out.write(reinterpret_cast<char*>(&v), 2); };
    out.write("RIFF", 4);
    u32(36 + static_cast<uint32_t>(data.size()));
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    u32(16);
    u16(format);
    u16(channels);
    u32(rate);
    u32(rate * channels * bits / 8);
    u16(static_cast<uint16_t>(channels * bits / 8));
    u16(bits);
    out.write("data", 4);
    u32(static_cast<uint32_t>(data.size()));
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

} // namespace

TEST_CASE("pcm16 normalization convention") {
    const std::string path = temp_path("ngpc_pcm16_norm.wav");
    std::vector<char> data(6);
    const int16_t values[3] = {32767, 0, -32768};
    std::memcpy(data.data(), values, 6);
    write_raw_wav(path, 1, 1, 8000, 16, data);

    AudioSignal sig = read_wav(path);
    REQUIRE(sig.samples.size() == 3);
    CHECK(sig.samples[0] == doctest::Approx(32767.0 / 32768.0).epsilon(1e-12));
    CHECK(sig.samples[1] == 0.0);
    CHECK(sig.samples[2] == -1.0);
    CHECK(sig.sample_rate == 8000);
}

TEST_CASE("silent file reads as all zeros") {
    const std::string path = temp_path("ngpc_silent.wav");
    AudioSignal silent;
    silent.samples.assign(500, 0.0);
    write_wav(silent, path, WavFormat::pcm16);
    AudioSignal back = read_wav(path);
    REQUIRE(back.samples.size() == 500);
    for (double s : back.samples) CHECK(s == 0.0);
}

TEST_CASE("float32 round trip is bit-identical") {
    const std::string path = temp_path("ngpc_f32_rt.wav");
    std::mt19937 rng(1);
    std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
    AudioSignal sig;
    sig.samples.resize(1000);
    for (auto& s : sig.samples) s = static_cast<double>(dist(rng));

    write_wav(sig, path, WavFormat::float32);
    AudioSignal back = read_wav(path);
    REQUIRE(back.samples.size() == sig.samples.size());
    for (std::size_t n = 0; n < sig.samples.size(); ++n)
        CHECK(back.samples[n] == sig.samples[n]);
}

TEST_CASE("pcm16 write clamps and rounds half away from zero") {
    const std::string path = temp_path("ngpc_pcm16_rt.wav");
    AudioSignal sig;
    sig.samples = {1.0, -1.0, 2.0, -2.0, 0.5 / 32768.0, -0.5 / 32768.0};
    write_wav(sig, path, WavFormat::pcm16);
    AudioSignal back = read_wav(path);
    CHECK(back.samples[0] == doctest::Approx(32767.0 / 32768.0));
    CHECK(back.samples[1] == -1.0);
    CHECK(back.samples[2] == doctest::Approx(32767.0 / 32768.0)); // clamped
    CHECK(back.samples[3] == -1.0);
    CHECK(back.samples[4] == doctest::Approx(1.0 / 32768.0)); // 0.5 rounds up
    CHECK(back.samples[5] == doctest::Approx(-1.0 / 32768.0));
}

TEST_CASE("stereo input is rejected") {
    const std::string path = temp_path("ngpc_stereo.wav");
    write_raw_wav(path, 1, 2, 8000, 16, std::vector<char>(8, 0));
    CHECK_THROWS_WITH_AS(read_wav(path), doctest::Contains("mono required"),
                         std::runtime_error);
}

TEST_CASE("unsupported codec names the format tag") {
    const std::string path = temp_path("ngpc_alaw.wav");
    write_raw_wav(path, 0x0006, 1, 8000, 8, std::vector<char>(8, 0));
    CHECK_THROWS_WITH_AS(read_wav(path), doctest::Contains("0006"),
                         std::runtime_error);
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(read_wav(temp_path("ngpc_does_not_exist.wav")),
                    std::runtime_error);
}
