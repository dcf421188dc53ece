#ifndef ECGDN_DATASET_HPP
#define ECGDN_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecgdn/noise.hpp"
#include "ecgdn/signal.hpp"

namespace ecgdn {

enum class PairKind { NoisyClean, CleanClean };

std::string pair_kind_name(PairKind k);
PairKind pair_kind_from_name(const std::string& name);

struct DatasetPair {
    EcgSegment input;
    EcgSegment target;
    PairKind kind = PairKind::NoisyClean;
    NoisePlan plan; // empty for clean-clean pairs
    std::string source_segment_id;
    std::uint64_t seed = 0;
};

struct DatasetBuildConfig {
    std::set<NoiseKind> menu;
    NoiseRanges ranges;
};

// Builds pairs from a clean corpus. round(fraction * M) segments become
// clean-clean pairs (selected by ranking a stable per-id hash, so the
// choice does not depend on input order); the rest become noisy-clean
// pairs with per-segment seeds hash(master_seed, split, segment_id).
// The two id sets are disjoint by construction (leakage rule).
std::vector<DatasetPair> build_dataset(const std::vector<EcgSegment>& clean_segments,
                                       double clean_clean_fraction,
                                       const std::string& split,
                                       std::uint64_t master_seed,
                                       const DatasetBuildConfig& config);

nlohmann::json plan_to_json(const NoisePlan& plan);
NoisePlan plan_from_json(const nlohmann::json& j);

// On-disk layout: <dir>/manifest.json plus one subdirectory per pair with
// input.csv/.json, target.csv/.json, and plan.json. All content is
// deterministic, so rebuilding with the same seed is byte-identical.
void save_dataset(const std::vector<DatasetPair>& pairs, const std::string& dir,
                  const std::string& split, std::uint64_t master_seed);
std::vector<DatasetPair> load_dataset(const std::string& dir);

} // namespace ecgdn

#endif
