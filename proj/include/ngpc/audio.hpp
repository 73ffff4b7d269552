#pragma once

#include <vector>

namespace ngpc {

/// Mono sample sequence with sample-rate metadata. Samples are nominally
/// in [-1, 1] when read from a file but the processing chain does not
/// assume any particular scale.
struct AudioSignal {
    std::vector<double> samples;
    int sample_rate = 8000;
};

} // namespace ngpc
