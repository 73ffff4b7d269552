#include "ngpc/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <vector>

namespace ngpc {
namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatIeeeFloat = 0x0003;

uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

uint16_t read_u16(std::istream& in) {
    unsigned char b[2];
    in.read(reinterpret_cast<char*>(b), 2);
    return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, uint32_t v) {
    const char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
                       static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
    out.write(b, 4);
}

void write_u16(std::ostream& out, uint16_t v) {
    const char b[2] = {static_cast<char>(v), static_cast<char>(v >> 8)};
    out.write(b, 2);
}

} // namespace

AudioSignal read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);

    char tag[4];
    in.read(tag, 4);
    if (!in || std::memcmp(tag, "RIFF", 4) != 0)
        throw std::runtime_error(path + ": not a RIFF file");
    read_u32(in); // riff size
    in.read(tag, 4);
    if (!in || std::memcmp(tag, "WAVE", 4) != 0)
        throw std::runtime_error(path + ": not a WAVE file");

    uint16_t format = 0, channels = 0, bits = 0;
    uint32_t sample_rate = 0;
    bool have_fmt = false;
    std::vector<char> data;

    while (in.read(tag, 4)) {
        const uint32_t chunk_size = read_u32(in);
        if (std::memcmp(tag, "fmt ", 4) == 0) {
            format = read_u16(in);
            channels = read_u16(in);
            sample_rate = read_u32(in);
            read_u32(in); // byte rate
            read_u16(in); // block align
            bits = read_u16(in);
            if (chunk_size > 16)
                in.seekg(chunk_size - 16, std::ios::cur);
            have_fmt = true;
        } else if (std::memcmp(tag, "data", 4) == 0) {
            data.resize(chunk_size);
            in.read(data.data(), chunk_size);
        } else {
            in.seekg(chunk_size + (chunk_size & 1u), std::ios::cur);
        }
    }
    if (!have_fmt)
        throw std::runtime_error(path + ": missing fmt chunk");
    if (channels != 1)
        throw std::runtime_error(path + ": mono required");
    if (format == kFormatPcm && bits != 16)
        throw std::runtime_error(path + ": unsupported PCM bit depth " +
                                 std::to_string(bits));
    if (format != kFormatPcm && format != kFormatIeeeFloat)
        throw std::runtime_error(path + ": unsupported format tag 0x" +
                                 [&] {
                                     char buf[8];
                                     std::snprintf(buf, sizeof buf, "%04x", format);
                                     return std::string(buf);
                                 }());
    if (format == kFormatIeeeFloat && bits != 32)
        throw std::runtime_error(path + ": unsupported float bit depth " +
                                 std::to_string(bits));

    AudioSignal sig;
    sig.sample_rate = static_cast<int>(sample_rate);
    if (sig.sample_rate != 8000)
        std::cerr << "warning: " << path << " sample rate is " << sample_rate
                  << " Hz, not 8000 Hz\n";

    if (format == kFormatPcm) {
        const std::size_t n = data.size() / 2;
        sig.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            int16_t v;
            std::memcpy(&v, data.data() + 2 * i, 2);
            sig.samples[i] = static_cast<double>(v) / 32768.0;
        }
    } else {
        const std::size_t n = data.size() / 4;
        sig.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            float v;
            std::memcpy(&v, data.data() + 4 * i, 4);
            sig.samples[i] = static_cast<double>(v);
        }
    }
    for (double s : sig.samples)
        if (!std::isfinite(s))
            throw std::runtime_error(path + ": non-finite sample");
    return sig;
}

void write_wav(const AudioSignal& signal, const std::string& path, WavFormat format) {
    for (double s : signal.samples)
        if (!std::isfinite(s))
            throw std::runtime_error("write_wav: non-finite sample");

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);

    const uint16_t bits = format == WavFormat::pcm16 ? 16 : 32;
    const uint16_t fmt_tag = format == WavFormat::pcm16 ? kFormatPcm : kFormatIeeeFloat;
    const uint32_t bytes_per_sample = bits / 8;
    const uint32_t data_size =
        static_cast<uint32_t>(signal.samples.size() * bytes_per_sample);
    const uint32_t sr = static_cast<uint32_t>(signal.sample_rate);

    out.write("RIFF", 4);
    write_u32(out, 36 + data_size);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    write_u32(out, 16);
    write_u16(out, fmt_tag);
    write_u16(out, 1); // mono
    write_u32(out, sr);
    write_u32(out, sr * bytes_per_sample);
    write_u16(out, static_cast<uint16_t>(bytes_per_sample));
    write_u16(out, bits);
    out.write("data", 4);
    write_u32(out, data_size);

    if (format == WavFormat::pcm16) {
        for (double s : signal.samples) {
            const double clamped = std::clamp(s, -1.0, 1.0);
            const double scaled = std::round(clamped * 32768.0); // half away from zero
            const int16_t v = static_cast<int16_t>(
                std::clamp(scaled, -32768.0, 32767.0));
            const char b[2] = {static_cast<char>(v & 0xff),
                               static_cast<char>((v >> 8) & 0xff)};
            out.write(b, 2);
        }
    } else {
        for (double s : signal.samples) {
            const float v = static_cast<float>(s);
            char b[4];
            std::memcpy(b, &v, 4);
            out.write(b, 4);
        }
    }
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

} // namespace ngpc
