#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ecgdn/errors.hpp"
#include "ecgdn/synth.hpp"

using namespace ecgdn;

namespace {

// Brute-force local-maximum scan: a sample counts as an R peak when it is
// the strict maximum of a window around it and exceeds the threshold.
std::vector<std::size_t> local_maxima(const std::vector<double>& x, double threshold,
                                      std::size_t half_window) {
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < threshold) continue;
        bool is_max = true;
        std::size_t lo = i > half_window ? i - half_window : 0;
        std::size_t hi = std::min(x.size() - 1, i + half_window);
        for (std::size_t k = lo; k <= hi; ++k)
            if (k != i && x[k] >= x[i]) { is_max = false; break; }
        if (is_max) peaks.push_back(i);
    }
    return peaks;
}

} // namespace

TEST_CASE("zero amplitudes give a flat segment with scheduled annotations") {
    SynthParams p;
    p.p.amplitude_mv = p.q.amplitude_mv = p.r.amplitude_mv = 0;
    p.s.amplitude_mv = p.t.amplitude_mv = 0;
    auto seg = synth_clean_ecg(p, 10.0, 500.0);
    for (const Lead& l : seg.leads)
        for (double v : l.samples) CHECK(v == 0.0);
    CHECK(seg.annotations.size() == 30); // 10 beats x (P, QRS, T)
}

TEST_CASE("heart rate 60 over 10 s gives exactly 10 evenly spaced R peaks") {
    SynthParams p;
    p.heart_rate_bpm = 60;
    p.rr_jitter = 0;
    auto seg = synth_clean_ecg(p, 10.0, 500.0);

    auto peaks = local_maxima(seg.lead("II").samples, 0.5, 100);
    REQUIRE(peaks.size() == 10);
    for (std::size_t k = 1; k < peaks.size(); ++k)
        CHECK(peaks[k] - peaks[k - 1] == 500);

    // Generator ground truth agrees with the scan.
    std::vector<std::int64_t> qrs_peaks;
    for (const auto& a : seg.annotations)
        if (a.wave_type == WaveType::QRS) qrs_peaks.push_back(a.peak);
    REQUIRE(qrs_peaks.size() == 10);
    for (std::size_t k = 0; k < 10; ++k)
        CHECK(qrs_peaks[k] == static_cast<std::int64_t>(peaks[k]));
}

TEST_CASE("fixed seed reproduces segment and annotations exactly") {
    SynthParams p;
    p.rr_jitter = 0.05;
    p.seed = 1234;
    auto a = synth_clean_ecg(p, 10.0, 500.0);
    auto b = synth_clean_ecg(p, 10.0, 500.0);
    CHECK(a == b);
}

TEST_CASE("annotations are ordered P < QRS < T within each beat") {
    SynthParams p;
    p.rr_jitter = 0.08;
    p.seed = 9;
    auto seg = synth_clean_ecg(p, 10.0, 500.0);
    REQUIRE(seg.annotations.size() % 3 == 0);
    const double period_samples = 60.0 / p.heart_rate_bpm * 500.0;
    for (std::size_t b = 0; b < seg.annotations.size(); b += 3) {
        const auto& pw = seg.annotations[b];
        const auto& qrs = seg.annotations[b + 1];
        const auto& tw = seg.annotations[b + 2];
        CHECK(pw.wave_type == WaveType::P);
        CHECK(qrs.wave_type == WaveType::QRS);
        CHECK(tw.wave_type == WaveType::T);
        CHECK(pw.peak < qrs.peak);
        CHECK(qrs.peak < tw.peak);
        // every QRS has its P within one beat period
        CHECK(qrs.peak - pw.peak < period_samples);
        CHECK(pw.normal);
        for (const auto* a : {&pw, &qrs, &tw}) {
            CHECK(a->onset <= a->peak);
            CHECK(a->peak < a->offset);
        }
    }
}

TEST_CASE("annotation peak is the argmax of the isolated bump") {
    // A single positive bump: generate with only the R wave enabled and
    // compare the annotation against a direct argmax.
    SynthParams p;
    p.p.amplitude_mv = p.q.amplitude_mv = p.s.amplitude_mv = p.t.amplitude_mv = 0;
    p.heart_rate_bpm = 30; // one beat in 2.5 s
    auto seg = synth_clean_ecg(p, 2.5, 500.0);
    const auto& x = seg.lead("II").samples;
    auto argmax = std::distance(x.begin(), std::max_element(x.begin(), x.end()));
    std::vector<WaveAnnotation> qrs;
    for (const auto& a : seg.annotations)
        if (a.wave_type == WaveType::QRS) qrs.push_back(a);
    REQUIRE(qrs.size() == 1);
    CHECK(qrs[0].peak == argmax);
}

TEST_CASE("wave shapes wider than the beat period are rejected") {
    SynthParams p;
    p.heart_rate_bpm = 300; // 0.2 s period, default shapes cannot fit
    CHECK_THROWS_AS(synth_clean_ecg(p, 10.0, 500.0), DataError);

    SynthParams q;
    q.t.width_s = 0; // zero width invalid
    CHECK_THROWS_AS(synth_clean_ecg(q, 10.0, 500.0), DataError);
}

TEST_CASE("jitter keeps beats ordered") {
    SynthParams p;
    p.rr_jitter = 0.5;
    p.seed = 77;
    auto seg = synth_clean_ecg(p, 20.0, 250.0);
    std::int64_t prev = -1;
    for (const auto& a : seg.annotations) {
        if (a.wave_type != WaveType::QRS) continue;
        CHECK(a.peak > prev);
        prev = a.peak;
    }
}
