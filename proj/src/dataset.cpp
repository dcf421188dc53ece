#include "ecgdn/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "ecgdn/errors.hpp"
#include "ecgdn/rng.hpp"

namespace ecgdn {

namespace fs = std::filesystem;
using nlohmann::json;

std::string pair_kind_name(PairKind k) {
    return k == PairKind::CleanClean ? "clean-clean" : "noisy-clean";
}

PairKind pair_kind_from_name(const std::string& name) {
    if (name == "clean-clean") return PairKind::CleanClean;
    if (name == "noisy-clean") return PairKind::NoisyClean;
    throw DataError("unknown pair kind: " + name);
}

std::vector<DatasetPair> build_dataset(const std::vector<EcgSegment>& clean_segments,
                                       double clean_clean_fraction,
                                       const std::string& split,
                                       std::uint64_t master_seed,
                                       const DatasetBuildConfig& config) {
    if (clean_clean_fraction < 0 || clean_clean_fraction > 1)
        throw DataError("clean_clean_fraction must lie in [0, 1]");

    std::set<std::string> ids;
    for (const auto& seg : clean_segments) {
        if (!ids.insert(seg.segment_id).second)
            throw DataError("duplicate segment_id: " + seg.segment_id);
    }

    const auto m = clean_segments.size();
    const auto n_cc = static_cast<std::size_t>(
        std::llround(clean_clean_fraction * static_cast<double>(m)));

    // Rank segments by a stable per-id hash; the n_cc smallest become
    // clean-clean pairs. Order-independent and reproducible.
    const std::uint64_t selection_seed = derive_seed(master_seed, split, "cc-selection");
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto ha = stable_hash(selection_seed, clean_segments[a].segment_id);
        auto hb = stable_hash(selection_seed, clean_segments[b].segment_id);
        if (ha != hb) return ha < hb;
        return clean_segments[a].segment_id < clean_segments[b].segment_id;
    });

    std::vector<bool> is_cc(m, false);
    for (std::size_t k = 0; k < n_cc && k < m; ++k) is_cc[order[k]] = true;

    std::vector<DatasetPair> pairs;
    pairs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const EcgSegment& seg = clean_segments[i];
        validate_segment(seg);
        DatasetPair pair;
        pair.source_segment_id = seg.segment_id;
        pair.target = seg;
        pair.seed = derive_seed(master_seed, split, seg.segment_id);
        if (is_cc[i]) {
            pair.kind = PairKind::CleanClean;
            pair.input = seg;
        } else {
            pair.kind = PairKind::NoisyClean;
            SegmentShape shape;
            for (const Lead& l : seg.leads) shape.lead_names.push_back(l.name);
            shape.length = static_cast<std::int64_t>(seg.length());
            shape.sample_rate = seg.sample_rate;
            Rng rng(pair.seed);
            pair.plan = sample_noise_plan(rng, shape, config.menu, config.ranges,
                                          /*require_noise=*/true);
            pair.plan.master_seed = master_seed;
            pair.input = apply_noise_plan(seg, pair.plan);
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

namespace {

json spec_to_json(const NoiseSpec& spec) {
    json j;
    j["kind"] = noise_kind_name(spec.kind);
    switch (spec.kind) {
        case NoiseKind::SineWander: {
            const auto& s = spec.sine.value();
            j["start"] = s.start;
            j["end"] = s.end;
            j["amplitude_mv"] = s.amplitude_mv;
            j["frequency_hz"] = s.frequency_hz;
            j["phase_rad"] = s.phase_rad;
            break;
        }
        case NoiseKind::WhiteNoise: {
            const auto& s = spec.white.value();
            j["start"] = s.start;
            j["end"] = s.end;
            j["amplitude_mv"] = s.amplitude_mv;
            j["frequency_hz"] = s.frequency_hz;
            j["seed"] = s.seed;
            break;
        }
        case NoiseKind::LinearWander: {
            const auto& s = spec.linear.value();
            j["start"] = s.start;
            j["end"] = s.end;
            j["slope_mv_per_s"] = s.slope_mv_per_s;
            break;
        }
        case NoiseKind::ShockPulses: {
            const auto& s = spec.shock.value();
            j["n_pulses"] = s.n_pulses();
            j["frequency_hz"] = s.frequency_hz;
            j["max_value_mv"] = s.max_value_mv;
            j["pulse_starts"] = s.pulse_starts;
            break;
        }
    }
    return j;
}

NoiseSpec spec_from_json(const json& j) {
    NoiseSpec spec;
    spec.kind = noise_kind_from_name(j.at("kind").get<std::string>());
    switch (spec.kind) {
        case NoiseKind::SineWander: {
            SineWanderSpec s;
            s.start = j.at("start").get<std::int64_t>();
            s.end = j.at("end").get<std::int64_t>();
            s.amplitude_mv = j.at("amplitude_mv").get<double>();
            s.frequency_hz = j.at("frequency_hz").get<double>();
            s.phase_rad = j.at("phase_rad").get<double>();
            spec.sine = s;
            break;
        }
        case NoiseKind::WhiteNoise: {
            WhiteNoiseSpec s;
            s.start = j.at("start").get<std::int64_t>();
            s.end = j.at("end").get<std::int64_t>();
            s.amplitude_mv = j.at("amplitude_mv").get<double>();
            s.frequency_hz = j.at("frequency_hz").get<double>();
            s.seed = j.at("seed").get<std::uint64_t>();
            spec.white = s;
            break;
        }
        case NoiseKind::LinearWander: {
            LinearWanderSpec s;
            s.start = j.at("start").get<std::int64_t>();
            s.end = j.at("end").get<std::int64_t>();
            s.slope_mv_per_s = j.at("slope_mv_per_s").get<double>();
            spec.linear = s;
            break;
        }
        case NoiseKind::ShockPulses: {
            ShockPulseSpec s;
            s.frequency_hz = j.at("frequency_hz").get<double>();
            s.max_value_mv = j.at("max_value_mv").get<double>();
            s.pulse_starts = j.at("pulse_starts").get<std::vector<std::int64_t>>();
            spec.shock = s;
            break;
        }
    }
    return spec;
}

} // namespace

json plan_to_json(const NoisePlan& plan) {
    json per_lead = json::object();
    for (const auto& [lead, specs] : plan.per_lead) {
        json arr = json::array();
        for (const auto& s : specs) arr.push_back(spec_to_json(s));
        per_lead[lead] = arr;
    }
    return json{{"master_seed", plan.master_seed}, {"per_lead", per_lead}};
}

NoisePlan plan_from_json(const json& j) {
    NoisePlan plan;
    plan.master_seed = j.at("master_seed").get<std::uint64_t>();
    for (const auto& [lead, arr] : j.at("per_lead").items()) {
        std::vector<NoiseSpec> specs;
        for (const auto& sj : arr) specs.push_back(spec_from_json(sj));
        plan.per_lead[lead] = std::move(specs);
    }
    return plan;
}

void save_dataset(const std::vector<DatasetPair>& pairs, const std::string& dir,
                  const std::string& split, std::uint64_t master_seed) {
    fs::create_directories(dir);
    json manifest;
    manifest["split"] = split;
    manifest["master_seed"] = master_seed;
    json entries = json::array();

    for (const DatasetPair& pair : pairs) {
        const std::string rel = "pairs/" + pair.source_segment_id;
        fs::create_directories(fs::path(dir) / rel);
        const std::string base = (fs::path(dir) / rel).string();
        save_segment(pair.input, base + "/input.csv");
        save_segment(pair.target, base + "/target.csv");
        {
            std::ofstream f(base + "/plan.json", std::ios::binary);
            f << plan_to_json(pair.plan).dump(2) << '\n';
        }
        entries.push_back(json{{"segment_id", pair.source_segment_id},
                               {"kind", pair_kind_name(pair.kind)},
                               {"seed", pair.seed},
                               {"path", rel}});
    }
    manifest["pairs"] = entries;
    std::ofstream f(fs::path(dir) / "manifest.json", std::ios::binary);
    if (!f) throw DataError("cannot write dataset manifest in " + dir);
    f << manifest.dump(2) << '\n';
}

std::vector<DatasetPair> load_dataset(const std::string& dir) {
    std::ifstream mf(fs::path(dir) / "manifest.json", std::ios::binary);
    if (!mf) throw DataError("no dataset manifest in " + dir);
    json manifest = json::parse(mf);

    std::vector<DatasetPair> pairs;
    for (const auto& e : manifest.at("pairs")) {
        DatasetPair pair;
        pair.source_segment_id = e.at("segment_id").get<std::string>();
        pair.kind = pair_kind_from_name(e.at("kind").get<std::string>());
        pair.seed = e.at("seed").get<std::uint64_t>();
        const std::string base = (fs::path(dir) / e.at("path").get<std::string>()).string();
        pair.input = load_segment(base + "/input.csv");
        pair.target = load_segment(base + "/target.csv");
        std::ifstream pf(base + "/plan.json", std::ios::binary);
        if (pf) pair.plan = plan_from_json(json::parse(pf));
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

} // namespace ecgdn
