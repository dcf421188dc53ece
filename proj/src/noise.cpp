#include "ecgdn/noise.hpp"

#include <algorithm>
#include <cmath>

#include "ecgdn/errors.hpp"

namespace ecgdn {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_window(const EcgSegment& seg, std::int64_t start, std::int64_t end) {
    const auto n = static_cast<std::int64_t>(seg.length());
    if (start < 0 || end > n || start >= end)
        throw DataError("noise window [" + std::to_string(start) + ", " +
                        std::to_string(end) + ") out of bounds for length " +
                        std::to_string(n));
}

} // namespace

std::string noise_kind_name(NoiseKind k) {
    switch (k) {
        case NoiseKind::SineWander: return "SineWander";
        case NoiseKind::WhiteNoise: return "WhiteNoise";
        case NoiseKind::LinearWander: return "LinearWander";
        case NoiseKind::ShockPulses: return "ShockPulses";
    }
    throw DataError("unknown noise kind");
}

NoiseKind noise_kind_from_name(const std::string& name) {
    if (name == "SineWander") return NoiseKind::SineWander;
    if (name == "WhiteNoise" || name == "MuscleArtifact") return NoiseKind::WhiteNoise;
    if (name == "LinearWander") return NoiseKind::LinearWander;
    if (name == "ShockPulses") return NoiseKind::ShockPulses;
    throw DataError("unknown noise kind name: " + name);
}

EcgSegment apply_sine_wander(const EcgSegment& segment, const std::string& lead,
                             const SineWanderSpec& spec) {
    check_window(segment, spec.start, spec.end);
    if (spec.amplitude_mv < 0) throw DataError("sine wander amplitude must be >= 0");
    if (!(spec.frequency_hz > 0)) throw DataError("sine wander frequency must be > 0");

    EcgSegment out = segment;
    auto& x = out.lead(lead).samples;
    const double fs = segment.sample_rate;
    for (std::int64_t i = spec.start; i < spec.end; ++i) {
        double t = static_cast<double>(i - spec.start) / fs;
        x[static_cast<std::size_t>(i)] +=
            spec.amplitude_mv * std::sin(2.0 * kPi * spec.frequency_hz * t + spec.phase_rad);
    }
    return out;
}

EcgSegment apply_linear_wander(const EcgSegment& segment, const std::string& lead,
                               const LinearWanderSpec& spec) {
    check_window(segment, spec.start, spec.end);

    EcgSegment out = segment;
    auto& x = out.lead(lead).samples;
    const double fs = segment.sample_rate;
    for (std::int64_t i = spec.start; i < spec.end; ++i)
        x[static_cast<std::size_t>(i)] +=
            spec.slope_mv_per_s * static_cast<double>(i - spec.start) / fs;
    return out;
}

WhiteNoiseResult apply_white_noise(const EcgSegment& segment, const std::string& lead,
                                   const WhiteNoiseSpec& spec) {
    check_window(segment, spec.start, spec.end);
    if (spec.amplitude_mv < 0) throw DataError("white noise amplitude must be >= 0");
    if (!(spec.frequency_hz > 0)) throw DataError("white noise frequency must be > 0");
    if (spec.frequency_hz > segment.sample_rate)
        throw DataError("white noise frequency exceeds sample rate (cannot hold below one sample)");

    WhiteNoiseResult result{segment, {}};
    auto& x = result.segment.lead(lead).samples;
    const double fs = segment.sample_rate;
    Rng rng(spec.seed);

    // A fresh draw whenever floor((i - start) * f / fs) increments; this
    // handles fractional hold lengths without drift.
    result.realization.resize(static_cast<std::size_t>(spec.end - spec.start));
    std::int64_t current_block = -1;
    double value = 0;
    for (std::int64_t i = spec.start; i < spec.end; ++i) {
        auto block = static_cast<std::int64_t>(std::floor(
            static_cast<double>(i - spec.start) * spec.frequency_hz / fs));
        if (block != current_block) {
            value = rng.uniform(-spec.amplitude_mv, spec.amplitude_mv);
            current_block = block;
        }
        x[static_cast<std::size_t>(i)] += value;
        result.realization[static_cast<std::size_t>(i - spec.start)] = value;
    }
    return result;
}

EcgSegment apply_shock_pulses(const EcgSegment& segment, const std::string& lead,
                              const ShockPulseSpec& spec) {
    if (spec.max_value_mv < 0) throw DataError("shock pulse max value must be >= 0");
    if (!spec.pulse_starts.empty() && !(spec.frequency_hz > 0))
        throw DataError("shock pulse frequency must be > 0");

    EcgSegment out = segment;
    if (spec.pulse_starts.empty()) return out;

    const double fs = segment.sample_rate;
    const auto n = static_cast<std::int64_t>(segment.length());
    const auto width = static_cast<std::int64_t>(std::llround(fs / spec.frequency_hz));
    if (width < 1) throw DataError("shock pulse width below one sample");

    std::vector<std::int64_t> starts = spec.pulse_starts;
    std::sort(starts.begin(), starts.end());
    for (std::size_t k = 0; k < starts.size(); ++k) {
        if (starts[k] < 0 || starts[k] + width > n)
            throw DataError("shock pulse at " + std::to_string(starts[k]) +
                            " extends past segment bounds");
        if (k > 0 && starts[k] < starts[k - 1] + width)
            throw DataError("overlapping shock pulse windows");
    }

    auto& x = out.lead(lead).samples;
    for (std::int64_t p : starts)
        for (std::int64_t i = p; i < p + width; ++i) {
            double t = static_cast<double>(i - p) / fs;
            x[static_cast<std::size_t>(i)] +=
                spec.max_value_mv * std::sin(2.0 * kPi * spec.frequency_hz * t);
        }
    return out;
}

namespace {

// Window of at least min_coverage * n samples, uniform over admissible
// (length, start) pairs.
std::pair<std::int64_t, std::int64_t> sample_window(Rng& rng, std::int64_t n,
                                                    double min_coverage) {
    auto min_len = static_cast<std::int64_t>(std::ceil(min_coverage * static_cast<double>(n)));
    min_len = std::clamp<std::int64_t>(min_len, 1, n);
    std::int64_t len = rng.uniform_int(min_len, n);
    std::int64_t start = rng.uniform_int(0, n - len);
    return {start, start + len};
}

NoiseSpec sample_spec(Rng& rng, NoiseKind kind, const SegmentShape& shape,
                      const NoiseRanges& r) {
    NoiseSpec spec;
    spec.kind = kind;
    const std::int64_t n = shape.length;
    switch (kind) {
        case NoiseKind::SineWander: {
            SineWanderSpec s;
            std::tie(s.start, s.end) = sample_window(rng, n, r.sine_min_coverage);
            s.amplitude_mv = rng.uniform(r.sine_amplitude_mv[0], r.sine_amplitude_mv[1]);
            s.frequency_hz = rng.uniform(r.sine_frequency_hz[0], r.sine_frequency_hz[1]);
            s.phase_rad = rng.uniform(0.0, 2.0 * kPi);
            spec.sine = s;
            break;
        }
        case NoiseKind::WhiteNoise: {
            WhiteNoiseSpec s;
            std::tie(s.start, s.end) = sample_window(rng, n, r.white_min_coverage);
            s.amplitude_mv = rng.uniform(r.white_amplitude_mv[0], r.white_amplitude_mv[1]);
            double max_freq = std::min(r.white_frequency_hz[1], shape.sample_rate);
            s.frequency_hz = rng.uniform(std::min(r.white_frequency_hz[0], max_freq), max_freq);
            s.seed = rng.next_u64();
            spec.white = s;
            break;
        }
        case NoiseKind::LinearWander: {
            LinearWanderSpec s;
            std::tie(s.start, s.end) = sample_window(rng, n, r.linear_min_coverage);
            double magnitude = rng.uniform(r.linear_slope_mv_per_s[0], r.linear_slope_mv_per_s[1]);
            s.slope_mv_per_s = (rng.uniform01() < 0.5) ? -magnitude : magnitude;
            spec.linear = s;
            break;
        }
        case NoiseKind::ShockPulses: {
            ShockPulseSpec s;
            s.frequency_hz = rng.uniform(r.shock_frequency_hz[0], r.shock_frequency_hz[1]);
            s.max_value_mv = rng.uniform(r.shock_max_value_mv[0], r.shock_max_value_mv[1]);
            auto width = static_cast<std::int64_t>(std::llround(shape.sample_rate / s.frequency_hz));
            int want = static_cast<int>(rng.uniform_int(r.shock_pulses[0], r.shock_pulses[1]));
            // Rejection placement without overlap; gives up on a pulse after
            // a bounded number of tries so dense configs still terminate.
            std::vector<std::int64_t> placed;
            for (int k = 0; k < want; ++k) {
                for (int attempt = 0; attempt < 64; ++attempt) {
                    if (width > n) break;
                    std::int64_t p = rng.uniform_int(0, n - width);
                    bool ok = true;
                    for (std::int64_t q : placed)
                        if (p < q + width && q < p + width) { ok = false; break; }
                    if (ok) {
                        placed.push_back(p);
                        break;
                    }
                }
            }
            std::sort(placed.begin(), placed.end());
            s.pulse_starts = std::move(placed);
            spec.shock = s;
            break;
        }
    }
    return spec;
}

} // namespace

NoisePlan sample_noise_plan(Rng& rng, const SegmentShape& shape,
                            const std::set<NoiseKind>& menu,
                            const NoiseRanges& ranges, bool require_noise) {
    if (shape.lead_names.empty()) throw DataError("segment shape has no leads");
    if (shape.length < 1) throw DataError("segment shape has no samples");
    if (menu.empty()) {
        if (require_noise) throw DataError("empty noise menu with require_noise set");
        return NoisePlan{};
    }

    NoisePlan plan;

    // Non-empty random lead subset.
    const auto n_leads = shape.lead_names.size();
    std::vector<std::size_t> selected;
    while (selected.empty()) {
        for (std::size_t i = 0; i < n_leads; ++i)
            if (rng.uniform01() < 0.5) selected.push_back(i);
    }

    const std::vector<NoiseKind> kinds(menu.begin(), menu.end());
    for (std::size_t idx : selected) {
        // Non-empty random subset of the enabled kinds for this lead.
        std::vector<NoiseKind> chosen;
        while (chosen.empty()) {
            for (NoiseKind k : kinds)
                if (rng.uniform01() < 0.5) chosen.push_back(k);
        }
        std::vector<NoiseSpec> specs;
        specs.reserve(chosen.size());
        for (NoiseKind k : chosen) specs.push_back(sample_spec(rng, k, shape, ranges));
        plan.per_lead[shape.lead_names[idx]] = std::move(specs);
    }
    return plan;
}

EcgSegment apply_noise_plan(const EcgSegment& segment, const NoisePlan& plan) {
    EcgSegment out = segment;
    for (const auto& [lead, specs] : plan.per_lead) {
        if (!out.has_lead(lead)) throw DataError("plan references unknown lead: " + lead);
        for (const NoiseSpec& spec : specs) {
            switch (spec.kind) {
                case NoiseKind::SineWander:
                    out = apply_sine_wander(out, lead, spec.sine.value());
                    break;
                case NoiseKind::WhiteNoise:
                    out = apply_white_noise(out, lead, spec.white.value()).segment;
                    break;
                case NoiseKind::LinearWander:
                    out = apply_linear_wander(out, lead, spec.linear.value());
                    break;
                case NoiseKind::ShockPulses:
                    out = apply_shock_pulses(out, lead, spec.shock.value());
                    break;
            }
        }
    }
    return out;
}

} // namespace ecgdn
