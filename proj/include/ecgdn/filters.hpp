#ifndef ECGDN_FILTERS_HPP
#define ECGDN_FILTERS_HPP

#include <complex>
#include <string>
#include <vector>

#include "ecgdn/signal.hpp"

namespace ecgdn {

enum class FilterKind { Lowpass, Highpass, Bandpass, Bandstop };

std::string filter_kind_name(FilterKind k);
FilterKind filter_kind_from_name(const std::string& name);

// One biquad, normalized so a0 = 1.
struct Biquad {
    double b0 = 1, b1 = 0, b2 = 0;
    double a1 = 0, a2 = 0;
};

// A designed filter realized as cascaded second-order sections (stable at
// order > 4 where direct forms fall apart).
struct FilterDesign {
    FilterKind kind = FilterKind::Lowpass;
    int order = 1;                 // prototype order
    std::vector<double> cutoffs_hz; // one entry, or two for bandpass/bandstop
    double sample_rate = 500.0;
    std::vector<Biquad> sections;

    // Realized order: bandpass/bandstop double the prototype order.
    int realized_order() const;
};

FilterDesign design_butterworth(FilterKind kind, int order,
                                const std::vector<double>& cutoffs_hz,
                                double sample_rate);

// Complex frequency response of the cascade at frequency_hz.
std::complex<double> frequency_response(const std::vector<Biquad>& sections,
                                        double frequency_hz, double sample_rate);
double magnitude_db(const std::vector<Biquad>& sections, double frequency_hz,
                    double sample_rate);

// Forward-backward filtering with odd reflection padding (3x the realized
// order) and steady-state initial conditions. Zero net phase; output length
// equals input length. Throws if the signal is not longer than the pad.
std::vector<double> zero_phase_filter(const std::vector<Biquad>& sections,
                                      const std::vector<double>& x, int pad_len);

EcgSegment apply_zero_phase(const FilterDesign& design, const EcgSegment& segment);

// A named cascade of designs applied in sequence to every lead.
struct FilterPreset {
    std::string name;
    std::vector<FilterDesign> stages;
};

// Stage parameters before realization; what the preset config file stores.
struct StageConfig {
    FilterKind kind = FilterKind::Lowpass;
    int order = 1;
    std::vector<double> cutoffs_hz;
};

struct PresetConfig {
    std::string name;
    std::vector<StageConfig> stages;
};

// Documented default presets: butterworth, multi-frequency-butterworth,
// biosppy, elgendi2010, engzeemod2012, hamilton2002, neurokit,
// pantompkins1985, vg. The named methods are reimplemented from their
// published passbands as Butterworth cascades; bit parity with any other
// package is not claimed.
const std::vector<PresetConfig>& default_preset_configs();
std::vector<std::string> preset_names();

FilterPreset make_preset(const PresetConfig& config, double sample_rate);
FilterPreset get_preset(const std::string& name, double sample_rate);

EcgSegment apply_zero_phase(const FilterPreset& preset, const EcgSegment& segment);
EcgSegment denoise_with_preset(const std::string& name, const EcgSegment& segment);

// JSON round trip for the shipped preset config file.
std::string preset_configs_to_json(const std::vector<PresetConfig>& configs);
std::vector<PresetConfig> preset_configs_from_json(const std::string& text);

} // namespace ecgdn

#endif
