#include "ecgdn/filters.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "ecgdn/errors.hpp"

namespace ecgdn {

namespace {

constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;

struct Zpk {
    std::vector<cplx> zeros;
    std::vector<cplx> poles;
    double gain = 1.0;
};

Zpk butterworth_prototype(int order) {
    Zpk zpk;
    for (int k = 0; k < order; ++k) {
        double theta = kPi * (2.0 * k + order + 1.0) / (2.0 * order);
        zpk.poles.push_back(std::polar(1.0, theta));
    }
    return zpk;
}

cplx prod_neg(const std::vector<cplx>& roots) {
    cplx p = 1.0;
    for (const cplx& r : roots) p *= -r;
    return p;
}

Zpk lp_to_lp(const Zpk& in, double wo) {
    Zpk out;
    for (const cplx& z : in.zeros) out.zeros.push_back(z * wo);
    for (const cplx& p : in.poles) out.poles.push_back(p * wo);
    int degree = static_cast<int>(in.poles.size() - in.zeros.size());
    out.gain = in.gain * std::pow(wo, degree);
    return out;
}

Zpk lp_to_hp(const Zpk& in, double wo) {
    Zpk out;
    for (const cplx& z : in.zeros) out.zeros.push_back(wo / z);
    for (const cplx& p : in.poles) out.poles.push_back(wo / p);
    int degree = static_cast<int>(in.poles.size() - in.zeros.size());
    for (int k = 0; k < degree; ++k) out.zeros.push_back(0.0);
    out.gain = in.gain * (prod_neg(in.zeros) / prod_neg(in.poles)).real();
    return out;
}

Zpk lp_to_bp(const Zpk& in, double wo, double bw) {
    Zpk out;
    auto transform = [&](const cplx& r, std::vector<cplx>& dst) {
        cplx scaled = r * bw / 2.0;
        cplx disc = std::sqrt(scaled * scaled - wo * wo);
        dst.push_back(scaled + disc);
        dst.push_back(scaled - disc);
    };
    for (const cplx& z : in.zeros) transform(z, out.zeros);
    for (const cplx& p : in.poles) transform(p, out.poles);
    int degree = static_cast<int>(in.poles.size() - in.zeros.size());
    for (int k = 0; k < degree; ++k) out.zeros.push_back(0.0);
    out.gain = in.gain * std::pow(bw, degree);
    return out;
}

Zpk lp_to_bs(const Zpk& in, double wo, double bw) {
    Zpk out;
    auto transform = [&](const cplx& r, std::vector<cplx>& dst) {
        cplx inv = (bw / 2.0) / r;
        cplx disc = std::sqrt(inv * inv - wo * wo);
        dst.push_back(inv + disc);
        dst.push_back(inv - disc);
    };
    for (const cplx& z : in.zeros) transform(z, out.zeros);
    for (const cplx& p : in.poles) transform(p, out.poles);
    int degree = static_cast<int>(in.poles.size() - in.zeros.size());
    for (int k = 0; k < degree; ++k) {
        out.zeros.push_back(cplx(0.0, wo));
        out.zeros.push_back(cplx(0.0, -wo));
    }
    out.gain = in.gain * (prod_neg(in.zeros) / prod_neg(in.poles)).real();
    return out;
}

Zpk bilinear(const Zpk& in, double fs) {
    const double fs2 = 2.0 * fs;
    Zpk out;
    for (const cplx& z : in.zeros) out.zeros.push_back((fs2 + z) / (fs2 - z));
    for (const cplx& p : in.poles) out.poles.push_back((fs2 + p) / (fs2 - p));
    cplx num = 1.0, den = 1.0;
    for (const cplx& z : in.zeros) num *= fs2 - z;
    for (const cplx& p : in.poles) den *= fs2 - p;
    int degree = static_cast<int>(in.poles.size() - in.zeros.size());
    for (int k = 0; k < degree; ++k) out.zeros.push_back(-1.0);
    out.gain = in.gain * (num / den).real();
    return out;
}

bool is_real_root(const cplx& r) { return std::abs(r.imag()) < 1e-10 * (1.0 + std::abs(r)); }

// A root unit: either a conjugate pair (two roots, real second-order poly)
// or one or two real roots.
struct RootUnit {
    std::vector<cplx> roots; // size 1 or 2
    cplx rep() const { return roots.front(); }
};

std::vector<RootUnit> group_conjugates(std::vector<cplx> roots) {
    std::vector<RootUnit> units;
    std::vector<double> reals;
    std::vector<cplx> upper;
    for (const cplx& r : roots) {
        if (is_real_root(r)) reals.push_back(r.real());
        else if (r.imag() > 0) upper.push_back(r);
    }
    for (const cplx& r : upper) units.push_back(RootUnit{{r, std::conj(r)}});
    // Pair real roots two at a time (sorted, adjacent values share a section).
    std::sort(reals.begin(), reals.end());
    for (std::size_t i = 0; i + 1 < reals.size(); i += 2)
        units.push_back(RootUnit{{reals[i], reals[i + 1]}});
    if (reals.size() % 2 == 1) units.push_back(RootUnit{{reals.back()}});
    return units;
}

// zeros count equals poles count after the bilinear transform, so every
// section receives as many zeros as poles.
std::vector<Biquad> zpk_to_sos(const Zpk& zpk) {
    auto pole_units = group_conjugates(zpk.poles);
    auto zero_units = group_conjugates(zpk.zeros);

    // Highest-Q pole pairs first; they get the nearest zeros.
    std::sort(pole_units.begin(), pole_units.end(), [](const RootUnit& a, const RootUnit& b) {
        return std::abs(a.rep()) > std::abs(b.rep());
    });

    std::vector<Biquad> sections;
    for (const RootUnit& pu : pole_units) {
        std::vector<cplx> zs;
        std::size_t want = pu.roots.size();
        while (zs.size() < want && !zero_units.empty()) {
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < zero_units.size(); ++i) {
                double d = std::abs(zero_units[i].rep() - pu.rep());
                if (d < best_d) { best_d = d; best = i; }
            }
            for (const cplx& z : zero_units[best].roots)
                if (zs.size() < want + 1) zs.push_back(z);
            zero_units.erase(zero_units.begin() + static_cast<std::ptrdiff_t>(best));
        }

        Biquad s;
        if (pu.roots.size() == 2) {
            s.a1 = -(pu.roots[0] + pu.roots[1]).real();
            s.a2 = (pu.roots[0] * pu.roots[1]).real();
        } else {
            s.a1 = -pu.roots[0].real();
            s.a2 = 0;
        }
        if (zs.size() >= 2) {
            s.b0 = 1;
            s.b1 = -(zs[0] + zs[1]).real();
            s.b2 = (zs[0] * zs[1]).real();
        } else if (zs.size() == 1) {
            s.b0 = 1;
            s.b1 = -zs[0].real();
            s.b2 = 0;
        }
        sections.push_back(s);
    }

    if (sections.empty()) sections.push_back(Biquad{});
    for (Biquad& s : sections) {
        // overall gain folded into the first section only
        if (&s == &sections.front()) {
            s.b0 *= zpk.gain;
            s.b1 *= zpk.gain;
            s.b2 *= zpk.gain;
        }
        break;
    }
    return sections;
}

} // namespace

std::string filter_kind_name(FilterKind k) {
    switch (k) {
        case FilterKind::Lowpass: return "lowpass";
        case FilterKind::Highpass: return "highpass";
        case FilterKind::Bandpass: return "bandpass";
        case FilterKind::Bandstop: return "bandstop";
    }
    throw DataError("unknown filter kind");
}

FilterKind filter_kind_from_name(const std::string& name) {
    if (name == "lowpass") return FilterKind::Lowpass;
    if (name == "highpass") return FilterKind::Highpass;
    if (name == "bandpass") return FilterKind::Bandpass;
    if (name == "bandstop") return FilterKind::Bandstop;
    throw DataError("unknown filter kind name: " + name);
}

int FilterDesign::realized_order() const {
    return (kind == FilterKind::Bandpass || kind == FilterKind::Bandstop) ? 2 * order : order;
}

FilterDesign design_butterworth(FilterKind kind, int order,
                                const std::vector<double>& cutoffs_hz,
                                double sample_rate) {
    if (order < 1) throw DataError("filter order must be >= 1");
    if (!(sample_rate > 0)) throw DataError("sample_rate must be > 0");
    const double nyquist = sample_rate / 2.0;
    const bool band = kind == FilterKind::Bandpass || kind == FilterKind::Bandstop;
    if (cutoffs_hz.size() != (band ? 2u : 1u))
        throw DataError("expected " + std::string(band ? "2" : "1") + " cutoff(s) for " +
                        filter_kind_name(kind));
    for (double f : cutoffs_hz)
        if (!(f > 0 && f < nyquist))
            throw DataError("cutoff " + std::to_string(f) + " Hz outside (0, " +
                            std::to_string(nyquist) + ")");
    if (band && !(cutoffs_hz[0] < cutoffs_hz[1]))
        throw DataError("band filters need low < high cutoff");

    auto warp = [&](double f) { return 2.0 * sample_rate * std::tan(kPi * f / sample_rate); };

    Zpk proto = butterworth_prototype(order);
    Zpk analog;
    switch (kind) {
        case FilterKind::Lowpass:
            analog = lp_to_lp(proto, warp(cutoffs_hz[0]));
            break;
        case FilterKind::Highpass:
            analog = lp_to_hp(proto, warp(cutoffs_hz[0]));
            break;
        case FilterKind::Bandpass: {
            double w1 = warp(cutoffs_hz[0]), w2 = warp(cutoffs_hz[1]);
            analog = lp_to_bp(proto, std::sqrt(w1 * w2), w2 - w1);
            break;
        }
        case FilterKind::Bandstop: {
            double w1 = warp(cutoffs_hz[0]), w2 = warp(cutoffs_hz[1]);
            analog = lp_to_bs(proto, std::sqrt(w1 * w2), w2 - w1);
            break;
        }
    }

    FilterDesign design;
    design.kind = kind;
    design.order = order;
    design.cutoffs_hz = cutoffs_hz;
    design.sample_rate = sample_rate;
    design.sections = zpk_to_sos(bilinear(analog, sample_rate));
    return design;
}

std::complex<double> frequency_response(const std::vector<Biquad>& sections,
                                        double frequency_hz, double sample_rate) {
    const cplx w = std::polar(1.0, -2.0 * kPi * frequency_hz / sample_rate);
    cplx h = 1.0;
    for (const Biquad& s : sections)
        h *= (s.b0 + s.b1 * w + s.b2 * w * w) / (1.0 + s.a1 * w + s.a2 * w * w);
    return h;
}

double magnitude_db(const std::vector<Biquad>& sections, double frequency_hz,
                    double sample_rate) {
    return 20.0 * std::log10(std::abs(frequency_response(sections, frequency_hz, sample_rate)));
}

namespace {

// Steady-state (unit step) state for each section, direct form II
// transposed, cascade-scaled so later sections see the DC gain of the
// earlier ones. Multiply by the first input sample before filtering.
std::vector<std::array<double, 2>> unit_step_state(const std::vector<Biquad>& sections) {
    std::vector<std::array<double, 2>> zi;
    double scale = 1.0;
    for (const Biquad& s : sections) {
        double denom = 1.0 + s.a1 + s.a2;
        double k = denom != 0.0 ? (s.b0 + s.b1 + s.b2) / denom : 0.0;
        double s2 = s.b2 - s.a2 * k;
        double s1 = s.b1 - s.a1 * k + s2;
        zi.push_back({scale * s1, scale * s2});
        scale *= k;
    }
    return zi;
}

void sosfilt_inplace(const std::vector<Biquad>& sections, std::vector<double>& x,
                     const std::vector<std::array<double, 2>>& zi, double x0) {
    std::vector<std::array<double, 2>> state(sections.size());
    for (std::size_t s = 0; s < sections.size(); ++s)
        state[s] = {zi[s][0] * x0, zi[s][1] * x0};
    for (double& v : x) {
        double in = v;
        for (std::size_t s = 0; s < sections.size(); ++s) {
            const Biquad& q = sections[s];
            double out = q.b0 * in + state[s][0];
            state[s][0] = q.b1 * in - q.a1 * out + state[s][1];
            state[s][1] = q.b2 * in - q.a2 * out;
            in = out;
        }
        v = in;
    }
}

} // namespace

std::vector<double> zero_phase_filter(const std::vector<Biquad>& sections,
                                      const std::vector<double>& x, int pad_len) {
    if (sections.empty()) return x;
    if (pad_len < 0) throw DataError("pad length must be >= 0");
    const auto n = static_cast<std::int64_t>(x.size());
    if (n <= pad_len)
        throw DataError("segment length " + std::to_string(n) +
                        " does not exceed the filter pad length " + std::to_string(pad_len));

    // Odd reflection about the end samples.
    std::vector<double> ext;
    ext.reserve(x.size() + 2 * static_cast<std::size_t>(pad_len));
    for (std::int64_t i = pad_len; i >= 1; --i)
        ext.push_back(2.0 * x[0] - x[static_cast<std::size_t>(i)]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::int64_t i = n - 2; i >= n - 1 - pad_len; --i)
        ext.push_back(2.0 * x[static_cast<std::size_t>(n - 1)] - x[static_cast<std::size_t>(i)]);

    const auto zi = unit_step_state(sections);
    sosfilt_inplace(sections, ext, zi, ext.front());
    std::reverse(ext.begin(), ext.end());
    sosfilt_inplace(sections, ext, zi, ext.front());
    std::reverse(ext.begin(), ext.end());

    return std::vector<double>(ext.begin() + pad_len, ext.begin() + pad_len + n);
}

EcgSegment apply_zero_phase(const FilterDesign& design, const EcgSegment& segment) {
    validate_segment(segment);
    EcgSegment out = segment;
    const int pad = 3 * design.realized_order();
    for (Lead& l : out.leads) l.samples = zero_phase_filter(design.sections, l.samples, pad);
    return out;
}

EcgSegment apply_zero_phase(const FilterPreset& preset, const EcgSegment& segment) {
    validate_segment(segment);
    if (preset.stages.empty()) return segment;
    std::vector<Biquad> cascade;
    int max_order = 0;
    for (const FilterDesign& d : preset.stages) {
        cascade.insert(cascade.end(), d.sections.begin(), d.sections.end());
        max_order = std::max(max_order, d.realized_order());
    }
    EcgSegment out = segment;
    const int pad = 3 * max_order;
    for (Lead& l : out.leads) l.samples = zero_phase_filter(cascade, l.samples, pad);
    return out;
}

const std::vector<PresetConfig>& default_preset_configs() {
    // Passbands from each method's original publication; realized here as
    // Butterworth cascades. The 0.67 Hz high-pass edge is the conventional
    // baseline-wander cutoff.
    static const std::vector<PresetConfig> configs = {
        {"butterworth", {{FilterKind::Bandpass, 4, {0.67, 40.0}}}},
        {"multi-frequency-butterworth",
         {{FilterKind::Highpass, 4, {0.67}},
          {FilterKind::Lowpass, 4, {100.0}},
          {FilterKind::Bandstop, 2, {48.0, 52.0}}}},
        {"biosppy", {{FilterKind::Bandpass, 4, {3.0, 45.0}}}},
        {"elgendi2010", {{FilterKind::Bandpass, 2, {8.0, 20.0}}}},
        {"engzeemod2012", {{FilterKind::Bandstop, 4, {48.0, 52.0}}}},
        {"hamilton2002", {{FilterKind::Bandpass, 1, {8.0, 16.0}}}},
        {"neurokit",
         {{FilterKind::Highpass, 5, {0.5}}, {FilterKind::Bandstop, 2, {48.0, 52.0}}}},
        {"pantompkins1985", {{FilterKind::Bandpass, 1, {5.0, 15.0}}}},
        {"vg", {{FilterKind::Bandpass, 2, {4.0, 20.0}}}},
    };
    return configs;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& c : default_preset_configs()) names.push_back(c.name);
    return names;
}

FilterPreset make_preset(const PresetConfig& config, double sample_rate) {
    FilterPreset preset;
    preset.name = config.name;
    for (const StageConfig& s : config.stages)
        preset.stages.push_back(design_butterworth(s.kind, s.order, s.cutoffs_hz, sample_rate));
    return preset;
}

FilterPreset get_preset(const std::string& name, double sample_rate) {
    for (const auto& c : default_preset_configs())
        if (c.name == name) return make_preset(c, sample_rate);
    std::string known;
    for (const auto& c : default_preset_configs()) {
        if (!known.empty()) known += ", ";
        known += c.name;
    }
    throw DataError("unknown preset '" + name + "'; registered presets: " + known);
}

EcgSegment denoise_with_preset(const std::string& name, const EcgSegment& segment) {
    return apply_zero_phase(get_preset(name, segment.sample_rate), segment);
}

std::string preset_configs_to_json(const std::vector<PresetConfig>& configs) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& c : configs) {
        nlohmann::json stages = nlohmann::json::array();
        for (const auto& s : c.stages)
            stages.push_back({{"kind", filter_kind_name(s.kind)},
                              {"order", s.order},
                              {"cutoffs_hz", s.cutoffs_hz}});
        j[c.name] = stages;
    }
    return j.dump(2);
}

std::vector<PresetConfig> preset_configs_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<PresetConfig> configs;
    for (const auto& [name, stages] : j.items()) {
        PresetConfig c;
        c.name = name;
        for (const auto& sj : stages) {
            StageConfig s;
            s.kind = filter_kind_from_name(sj.at("kind").get<std::string>());
            s.order = sj.at("order").get<int>();
            s.cutoffs_hz = sj.at("cutoffs_hz").get<std::vector<double>>();
            c.stages.push_back(s);
        }
        configs.push_back(c);
    }
    return configs;
}

} // namespace ecgdn
