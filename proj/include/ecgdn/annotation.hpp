#ifndef ECGDN_ANNOTATION_HPP
#define ECGDN_ANNOTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ecgdn {

enum class WaveType { P, QRS, T };

std::string wave_type_name(WaveType t);
WaveType wave_type_from_name(const std::string& name);

// One delineated wave. onset/offset form a half-open sample interval
// [onset, offset) with onset <= peak < offset.
struct WaveAnnotation {
    WaveType wave_type = WaveType::P;
    std::int64_t peak = 0;
    std::int64_t onset = 0;
    std::int64_t offset = 0;
    bool normal = true;

    bool operator==(const WaveAnnotation&) const = default;
};

void validate_annotation(const WaveAnnotation& a);

} // namespace ecgdn

#endif
