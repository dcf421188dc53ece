#include "ecgdn/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ecgdn/errors.hpp"

namespace ecgdn {

using nlohmann::json;

std::string wave_type_name(WaveType t) {
    switch (t) {
        case WaveType::P: return "P";
        case WaveType::QRS: return "QRS";
        case WaveType::T: return "T";
    }
    throw DataError("unknown wave type");
}

WaveType wave_type_from_name(const std::string& name) {
    if (name == "P") return WaveType::P;
    if (name == "QRS") return WaveType::QRS;
    if (name == "T") return WaveType::T;
    throw DataError("unknown wave type name: " + name);
}

void validate_annotation(const WaveAnnotation& a) {
    if (!(a.onset <= a.peak && a.peak < a.offset))
        throw DataError("annotation violates onset <= peak < offset");
}

bool EcgSegment::has_lead(const std::string& name) const {
    return std::any_of(leads.begin(), leads.end(),
                       [&](const Lead& l) { return l.name == name; });
}

const Lead& EcgSegment::lead(const std::string& name) const {
    for (const Lead& l : leads)
        if (l.name == name) return l;
    throw DataError("unknown lead: " + name);
}

Lead& EcgSegment::lead(const std::string& name) {
    for (Lead& l : leads)
        if (l.name == name) return l;
    throw DataError("unknown lead: " + name);
}

void validate_segment(const EcgSegment& segment) {
    if (segment.leads.empty()) throw DataError("segment has no leads");
    if (!(segment.sample_rate > 0)) throw DataError("sample_rate must be > 0");
    const std::size_t n = segment.leads.front().samples.size();
    if (n < 1) throw DataError("leads must contain at least one sample");
    for (const Lead& l : segment.leads) {
        if (l.samples.size() != n) throw DataError("ragged leads: " + l.name);
        for (double v : l.samples)
            if (!std::isfinite(v))
                throw DataError("non-finite sample in lead " + l.name);
    }
}

EcgSegment derive_leads(const EcgSegment& segment) {
    if (!segment.has_lead("I") || !segment.has_lead("II"))
        throw DataError("derive_leads requires leads I and II");
    const auto& i = segment.lead("I").samples;
    const auto& ii = segment.lead("II").samples;
    if (i.size() != ii.size()) throw DataError("ragged leads: I vs II");

    EcgSegment out = segment;
    const std::size_t n = i.size();
    Lead l3{"III", std::vector<double>(n)};
    Lead avr{"aVR", std::vector<double>(n)};
    Lead avl{"aVL", std::vector<double>(n)};
    Lead avf{"aVF", std::vector<double>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        l3.samples[k] = ii[k] - i[k];
        avr.samples[k] = -(i[k] + ii[k]) / 2.0;
        avl.samples[k] = i[k] - ii[k] / 2.0;
        avf.samples[k] = ii[k] - i[k] / 2.0;
    }
    out.leads.push_back(std::move(l3));
    out.leads.push_back(std::move(avr));
    out.leads.push_back(std::move(avl));
    out.leads.push_back(std::move(avf));
    return out;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string sidecar_path(const std::string& csv_path) {
    auto dot = csv_path.find_last_of('.');
    auto slash = csv_path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return csv_path + ".json";
    return csv_path.substr(0, dot) + ".json";
}

namespace {

json annotation_to_json(const WaveAnnotation& a) {
    return json{{"type", wave_type_name(a.wave_type)},
                {"peak", a.peak},
                {"onset", a.onset},
                {"offset", a.offset},
                {"normal", a.normal}};
}

WaveAnnotation annotation_from_json(const json& j) {
    WaveAnnotation a;
    a.wave_type = wave_type_from_name(j.at("type").get<std::string>());
    a.peak = j.at("peak").get<std::int64_t>();
    a.onset = j.at("onset").get<std::int64_t>();
    a.offset = j.at("offset").get<std::int64_t>();
    a.normal = j.at("normal").get<bool>();
    validate_annotation(a);
    return a;
}

} // namespace

void save_segment(const EcgSegment& segment, const std::string& path) {
    validate_segment(segment);

    std::ofstream csv(path, std::ios::binary);
    if (!csv) throw DataError("cannot open for writing: " + path);
    for (std::size_t c = 0; c < segment.leads.size(); ++c) {
        if (c) csv << ',';
        csv << segment.leads[c].name;
    }
    csv << '\n';
    const std::size_t n = segment.length();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t c = 0; c < segment.leads.size(); ++c) {
            if (c) csv << ',';
            csv << format_double(segment.leads[c].samples[k]);
        }
        csv << '\n';
    }
    if (!csv) throw DataError("write failed: " + path);

    json meta;
    meta["segment_id"] = segment.segment_id;
    meta["sample_rate"] = segment.sample_rate;
    if (!segment.annotations.empty()) {
        json anns = json::array();
        for (const auto& a : segment.annotations) anns.push_back(annotation_to_json(a));
        meta["annotations"] = anns;
    }
    std::ofstream side(sidecar_path(path), std::ios::binary);
    if (!side) throw DataError("cannot open for writing: " + sidecar_path(path));
    side << meta.dump(2) << '\n';
}

EcgSegment load_segment(const std::string& path) {
    std::ifstream csv(path, std::ios::binary);
    if (!csv) throw DataError("cannot open segment file: " + path);

    EcgSegment segment;
    std::string line;
    if (!std::getline(csv, line)) throw DataError("malformed header: empty file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::stringstream ss(line);
        std::string name;
        while (std::getline(ss, name, ','))
            segment.leads.push_back(Lead{name, {}});
        if (segment.leads.empty()) throw DataError("malformed header: no lead names in " + path);
    }

    std::size_t row = 0;
    while (std::getline(csv, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(ss, cell, ',')) {
            if (col >= segment.leads.size())
                throw DataError("ragged leads: extra column at row " + std::to_string(row));
            char* end = nullptr;
            double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0')
                throw DataError("unparseable sample '" + cell + "' at row " + std::to_string(row));
            if (!std::isfinite(v))
                throw DataError("non-finite sample at row " + std::to_string(row));
            segment.leads[col].samples.push_back(v);
            ++col;
        }
        if (col != segment.leads.size())
            throw DataError("ragged leads: row " + std::to_string(row) + " has " +
                            std::to_string(col) + " of " + std::to_string(segment.leads.size()) +
                            " columns");
        ++row;
    }

    std::ifstream side(sidecar_path(path), std::ios::binary);
    if (side) {
        json meta = json::parse(side);
        segment.segment_id = meta.value("segment_id", std::string{});
        segment.sample_rate = meta.value("sample_rate", 500.0);
        if (meta.contains("annotations"))
            for (const auto& j : meta.at("annotations"))
                segment.annotations.push_back(annotation_from_json(j));
    }

    validate_segment(segment);
    return segment;
}

} // namespace ecgdn
