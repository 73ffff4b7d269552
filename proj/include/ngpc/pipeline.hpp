#pragma once

#include "ngpc/ams.hpp"
#include "ngpc/audio.hpp"
#include "ngpc/gain.hpp"
#include "ngpc/noise.hpp"
#include "ngpc/phase.hpp"

namespace ngpc {

/// Full configuration for the two-stage enhancement flow. Stage 1 and
/// stage 2 carry independent framing parameters; the defaults make them
/// identical.
struct PipelineConfig {
    AmsConfig stage1;
    AmsConfig stage2;
    NoiseParams noise;
    GainContext gain;   // prev_* vectors ignored; per-run memory is internal
    PscConfig psc;
};

/// Stage 1: per-frame geometric-approach magnitude compensation driven by
/// the tracked noise estimate, recombined with the noisy phase and
/// resynthesized. Output length equals input length.
AudioSignal enhance_stage1(const AudioSignal& noisy, const PipelineConfig& config);

/// Stage 2: re-analyze the intermediate signal and push conjugate bin pairs
/// apart with the anti-symmetric compensation function before real-part
/// resynthesis.
AudioSignal enhance_stage2(const AudioSignal& intermediate,
                           const PipelineConfig& config);

/// enhance_stage2(enhance_stage1(noisy)). Deterministic for fixed inputs.
AudioSignal enhance(const AudioSignal& noisy, const PipelineConfig& config);

} // namespace ngpc
