#pragma once

#include <string>

#include "ngpc/audio.hpp"

namespace ngpc {

enum class WavFormat { pcm16, float32 };

/// Read a mono RIFF/WAVE file (PCM 16-bit or IEEE float 32-bit). PCM
/// samples are normalized by 1/32768. Throws std::runtime_error on
/// malformed files, stereo input ("mono required") or unsupported codecs.
AudioSignal read_wav(const std::string& path);

/// Write a mono WAV file. The pcm16 path clamps to [-1, 1] and rounds half
/// away from zero; float32 is lossless for float-representable samples.
void write_wav(const AudioSignal& signal, const std::string& path,
               WavFormat format = WavFormat::pcm16);

} // namespace ngpc
