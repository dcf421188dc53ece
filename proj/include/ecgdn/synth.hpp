#ifndef ECGDN_SYNTH_HPP
#define ECGDN_SYNTH_HPP

#include <cstdint>

#include "ecgdn/signal.hpp"

namespace ecgdn {

// One Gaussian bump: amplitude * exp(-(t - center)^2 / (2 width^2)), with
// center = R-peak time + offset_from_r. Width is the Gaussian sigma in
// seconds; the bump's annotated support is +/- 3 sigma.
struct WaveShape {
    double amplitude_mv = 0;
    double width_s = 0;
    double offset_from_r_s = 0;
};

struct SynthParams {
    double heart_rate_bpm = 60.0;
    WaveShape p{0.2, 0.018, -0.14};
    WaveShape q{-0.1, 0.008, -0.03};
    WaveShape r{1.0, 0.012, 0.0};
    WaveShape s{-0.2, 0.009, 0.03};
    WaveShape t{0.3, 0.04, 0.25};
    // Fractional std of beat spacing; multiplicative Gaussian, clamped to
    // +/- 50% so beats never reorder.
    double rr_jitter = 0.0;
    // Lead I is the same bump train scaled by this factor; lead II carries
    // the shapes as configured (P upright in lead II by default).
    double lead_one_scale = 0.5;
    std::uint64_t seed = 0;
};

void validate_synth_params(const SynthParams& params);

// Generates a two-lead (I, II) clean segment with ground-truth annotations
// (also stored in segment.annotations). Deterministic in (params, duration,
// sample_rate). Only beats whose full P..T support fits inside the segment
// are emitted, so the signal and the annotation list always agree.
EcgSegment synth_clean_ecg(const SynthParams& params, double duration_s,
                           double sample_rate = 500.0);

} // namespace ecgdn

#endif
