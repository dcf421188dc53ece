#ifndef ECGDN_NOISE_HPP
#define ECGDN_NOISE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ecgdn/rng.hpp"
#include "ecgdn/signal.hpp"

namespace ecgdn {

enum class NoiseKind { SineWander, WhiteNoise, LinearWander, ShockPulses };

std::string noise_kind_name(NoiseKind k);
NoiseKind noise_kind_from_name(const std::string& name);

// All windows are half-open sample index ranges [start, end).

struct SineWanderSpec {
    std::int64_t start = 0;
    std::int64_t end = 0;
    double amplitude_mv = 0;
    double frequency_hz = 0;
    double phase_rad = 0;
};

struct WhiteNoiseSpec {
    std::int64_t start = 0;
    std::int64_t end = 0;
    double amplitude_mv = 0;
    // Hold rate of the zero-order-hold noise process: a fresh uniform draw
    // every sample_rate/frequency samples.
    double frequency_hz = 0;
    std::uint64_t seed = 0;
};

struct LinearWanderSpec {
    std::int64_t start = 0;
    std::int64_t end = 0;
    double slope_mv_per_s = 0;
};

struct ShockPulseSpec {
    // Pulse width is one full sine period: round(sample_rate/frequency).
    double frequency_hz = 0;
    double max_value_mv = 0;
    std::vector<std::int64_t> pulse_starts;

    std::size_t n_pulses() const { return pulse_starts.size(); }
};

// Tagged union of the four kinds; exactly one optional is set.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::SineWander;
    std::optional<SineWanderSpec> sine;
    std::optional<WhiteNoiseSpec> white;
    std::optional<LinearWanderSpec> linear;
    std::optional<ShockPulseSpec> shock;
};

struct NoisePlan {
    std::uint64_t master_seed = 0;
    // Lead name -> noise specs applied to that lead. Keys are exactly the
    // affected-leads subset; an empty map is the empty plan.
    std::map<std::string, std::vector<NoiseSpec>> per_lead;

    bool empty() const { return per_lead.empty(); }
};

EcgSegment apply_sine_wander(const EcgSegment& segment, const std::string& lead,
                             const SineWanderSpec& spec);
EcgSegment apply_linear_wander(const EcgSegment& segment, const std::string& lead,
                               const LinearWanderSpec& spec);

// Zero-order-hold uniform noise in [-amplitude, +amplitude]. Returns the
// added realization (one value per window sample) for reproducibility.
struct WhiteNoiseResult {
    EcgSegment segment;
    std::vector<double> realization;
};
WhiteNoiseResult apply_white_noise(const EcgSegment& segment, const std::string& lead,
                                   const WhiteNoiseSpec& spec);

EcgSegment apply_shock_pulses(const EcgSegment& segment, const std::string& lead,
                              const ShockPulseSpec& spec);

// Configurable parameter ranges for the plan sampler. The paper gives no
// numeric ranges; these defaults are documented configuration, not ground
// truth. Sine/linear windows always cover >= 60% of the segment, white
// noise >= 20%.
struct NoiseRanges {
    double sine_amplitude_mv[2] = {0.05, 0.5};
    double sine_frequency_hz[2] = {0.15, 0.8}; // respiratory band
    double white_amplitude_mv[2] = {0.02, 0.2};
    double white_frequency_hz[2] = {25.0, 250.0};
    double linear_slope_mv_per_s[2] = {0.02, 0.3}; // sign drawn separately
    int shock_pulses[2] = {1, 5};
    double shock_frequency_hz[2] = {2.0, 10.0};
    double shock_max_value_mv[2] = {0.5, 3.0};
    double sine_min_coverage = 0.6;
    double linear_min_coverage = 0.6;
    double white_min_coverage = 0.2;
};

struct SegmentShape {
    std::vector<std::string> lead_names;
    std::int64_t length = 0;
    double sample_rate = 500.0;
};

// Selects a non-empty random lead subset, a non-empty random subset of the
// enabled kinds per selected lead, and parameters uniform over the ranges.
// Deterministic given the rng state. An empty menu yields the empty plan
// unless require_noise is set.
NoisePlan sample_noise_plan(Rng& rng, const SegmentShape& shape,
                            const std::set<NoiseKind>& menu,
                            const NoiseRanges& ranges, bool require_noise = false);

// Applies every spec in the plan. All transforms are additive, so the
// result is target + sum of noise components, independent of order.
EcgSegment apply_noise_plan(const EcgSegment& segment, const NoisePlan& plan);

} // namespace ecgdn

#endif
