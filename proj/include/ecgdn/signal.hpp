#ifndef ECGDN_SIGNAL_HPP
#define ECGDN_SIGNAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ecgdn/annotation.hpp"

namespace ecgdn {

struct Lead {
    std::string name;
    std::vector<double> samples; // millivolts

    bool operator==(const Lead&) const = default;
};

// Multilead sampled waveform. Immutable by convention after construction:
// operations take a segment by const reference and return a new one, so
// segments are safe to share across threads.
struct EcgSegment {
    std::string segment_id;
    double sample_rate = 500.0; // samples per second
    std::vector<Lead> leads;
    std::vector<WaveAnnotation> annotations; // optional ground truth

    std::size_t length() const { return leads.empty() ? 0 : leads.front().samples.size(); }
    bool has_lead(const std::string& name) const;
    const Lead& lead(const std::string& name) const;
    Lead& lead(const std::string& name);

    bool operator==(const EcgSegment&) const = default;
};

// Throws DataError unless all leads have identical length N >= 1,
// sample_rate > 0, and every sample is finite.
void validate_segment(const EcgSegment& segment);

// Appends III = II - I, aVR = -(I + II)/2, aVL = I - II/2, aVF = II - I/2
// (Einthoven/Goldberger relations). Original leads are unchanged.
EcgSegment derive_leads(const EcgSegment& segment);

// CSV segment file: first line is the comma-separated lead names, one row
// per sample index (17 significant digits, so doubles round-trip exactly).
// A sidecar JSON file (same path, extension replaced by .json) carries
// {segment_id, sample_rate, annotations?}.
void save_segment(const EcgSegment& segment, const std::string& path);
EcgSegment load_segment(const std::string& path);

std::string sidecar_path(const std::string& csv_path);

// Lossless text form of a double (shortest of %.17g that parses back equal
// would be nicer still, but fixed 17 digits keeps files byte-stable).
std::string format_double(double value);

} // namespace ecgdn

#endif
