#include "ecgdn/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecgdn/errors.hpp"
#include "ecgdn/rng.hpp"

namespace ecgdn {

namespace {

struct BumpRef {
    const WaveShape* shape;
    const char* name;
};

double front_extent_s(const SynthParams& p) {
    double e = 0;
    for (const WaveShape* w : {&p.p, &p.q, &p.r, &p.s, &p.t})
        e = std::max(e, -(w->offset_from_r_s - 3.0 * w->width_s));
    return e;
}

double back_extent_s(const SynthParams& p) {
    double e = 0;
    for (const WaveShape* w : {&p.p, &p.q, &p.r, &p.s, &p.t})
        e = std::max(e, w->offset_from_r_s + 3.0 * w->width_s);
    return e;
}

// Adds the bump to the lead and returns its ground-truth peak sample:
// the argmax (argmin for negative amplitudes) of the bump in isolation,
// or the nearest sample to the center when the amplitude is zero.
std::int64_t add_bump(std::vector<double>& lead, double scale, const WaveShape& w,
                      double center_s, double fs) {
    const double a = scale * w.amplitude_mv;
    const double sigma = w.width_s;
    const auto n = static_cast<std::int64_t>(lead.size());
    const auto lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(
                                                  std::floor((center_s - 5.0 * sigma) * fs)));
    const auto hi = std::min<std::int64_t>(n - 1, static_cast<std::int64_t>(
                                                      std::ceil((center_s + 5.0 * sigma) * fs)));
    std::int64_t peak = static_cast<std::int64_t>(std::llround(center_s * fs));
    double best = 0;
    bool first = true;
    for (std::int64_t i = lo; i <= hi; ++i) {
        double t = static_cast<double>(i) / fs - center_s;
        double v = a * std::exp(-t * t / (2.0 * sigma * sigma));
        lead[static_cast<std::size_t>(i)] += v;
        double score = (w.amplitude_mv < 0) ? -v : v;
        if (w.amplitude_mv != 0 && (first || score > best)) {
            best = score;
            peak = i;
            first = false;
        }
    }
    return std::clamp<std::int64_t>(peak, 0, n - 1);
}

} // namespace

void validate_synth_params(const SynthParams& params) {
    if (!(params.heart_rate_bpm > 0)) throw DataError("heart_rate must be > 0");
    if (params.rr_jitter < 0) throw DataError("rr_jitter must be >= 0");
    for (const WaveShape* w : {&params.p, &params.q, &params.r, &params.s, &params.t})
        if (!(w->width_s > 0)) throw DataError("wave widths must be > 0");
    const double period = 60.0 / params.heart_rate_bpm;
    if (front_extent_s(params) + back_extent_s(params) > period)
        throw DataError("wave shapes span " +
                        std::to_string(front_extent_s(params) + back_extent_s(params)) +
                        " s, exceeding the " + std::to_string(period) + " s beat period");
}

EcgSegment synth_clean_ecg(const SynthParams& params, double duration_s,
                           double sample_rate) {
    validate_synth_params(params);
    if (!(duration_s > 0)) throw DataError("duration must be > 0");
    if (!(sample_rate > 0)) throw DataError("sample_rate must be > 0");

    const double fs = sample_rate;
    const auto n = static_cast<std::size_t>(std::llround(duration_s * fs));
    if (n < 1) throw DataError("duration shorter than one sample");

    const double period = 60.0 / params.heart_rate_bpm;
    const double front = front_extent_s(params);
    const double back = back_extent_s(params);

    Rng rng(params.seed);

    // Beat schedule: R-peak times. Jitter scales each RR interval; the clamp
    // keeps intervals positive so beats cannot reorder.
    std::vector<double> r_times;
    double t = std::max(front, 0.35 * period);
    while (true) {
        if (t + back >= duration_s) break;
        r_times.push_back(t);
        double factor = 1.0;
        if (params.rr_jitter > 0)
            factor = std::clamp(1.0 + params.rr_jitter * rng.normal(), 0.5, 1.5);
        t += period * factor;
    }

    EcgSegment seg;
    seg.sample_rate = fs;
    seg.leads.push_back(Lead{"I", std::vector<double>(n, 0.0)});
    seg.leads.push_back(Lead{"II", std::vector<double>(n, 0.0)});
    auto& lead1 = seg.leads[0].samples;
    auto& lead2 = seg.leads[1].samples;

    auto interval = [&](double center_s, double sigma_s, std::int64_t peak) {
        std::int64_t onset = static_cast<std::int64_t>(std::llround((center_s - 3.0 * sigma_s) * fs));
        std::int64_t offset = static_cast<std::int64_t>(std::llround((center_s + 3.0 * sigma_s) * fs)) + 1;
        onset = std::clamp<std::int64_t>(onset, 0, static_cast<std::int64_t>(n) - 1);
        offset = std::clamp<std::int64_t>(offset, onset + 1, static_cast<std::int64_t>(n));
        onset = std::min(onset, peak);
        return std::pair{onset, std::max(offset, peak + 1)};
    };

    for (double r : r_times) {
        // Lead I first so annotations (taken from lead II bumps) stay tied to
        // the lead II morphology.
        for (const WaveShape* w : {&params.p, &params.q, &params.r, &params.s, &params.t})
            add_bump(lead1, params.lead_one_scale, *w, r + w->offset_from_r_s, fs);

        std::int64_t p_peak = add_bump(lead2, 1.0, params.p, r + params.p.offset_from_r_s, fs);
        add_bump(lead2, 1.0, params.q, r + params.q.offset_from_r_s, fs);
        std::int64_t r_peak = add_bump(lead2, 1.0, params.r, r + params.r.offset_from_r_s, fs);
        add_bump(lead2, 1.0, params.s, r + params.s.offset_from_r_s, fs);
        std::int64_t t_peak = add_bump(lead2, 1.0, params.t, r + params.t.offset_from_r_s, fs);

        WaveAnnotation pa;
        pa.wave_type = WaveType::P;
        pa.peak = p_peak;
        std::tie(pa.onset, pa.offset) =
            interval(r + params.p.offset_from_r_s, params.p.width_s, p_peak);

        // The QRS interval spans the Q bump onset through the S bump offset.
        WaveAnnotation qrs;
        qrs.wave_type = WaveType::QRS;
        qrs.peak = r_peak;
        auto [q_on, q_off] = interval(r + params.q.offset_from_r_s, params.q.width_s, r_peak);
        auto [s_on, s_off] = interval(r + params.s.offset_from_r_s, params.s.width_s, r_peak);
        qrs.onset = std::min({q_on, s_on, r_peak});
        qrs.offset = std::max({q_off, s_off, r_peak + 1});

        WaveAnnotation ta;
        ta.wave_type = WaveType::T;
        ta.peak = t_peak;
        std::tie(ta.onset, ta.offset) =
            interval(r + params.t.offset_from_r_s, params.t.width_s, t_peak);

        seg.annotations.push_back(pa);
        seg.annotations.push_back(qrs);
        seg.annotations.push_back(ta);
    }

    std::stable_sort(seg.annotations.begin(), seg.annotations.end(),
                     [](const WaveAnnotation& a, const WaveAnnotation& b) {
                         return a.peak < b.peak;
                     });

    validate_segment(seg);
    return seg;
}

} // namespace ecgdn
