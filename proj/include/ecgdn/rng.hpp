#ifndef ECGDN_RNG_HPP
#define ECGDN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace ecgdn {

// Deterministic RNG used everywhere randomness is needed. The engine
// (mt19937_64) is fully specified by the standard, and the distributions
// below are hand-rolled, so a given seed produces the same stream on every
// platform and standard library. Do not swap in std::*_distribution: those
// are implementation-defined and would break byte-identical regeneration.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform integer in [0, n). n must be >= 1.
    std::uint64_t uniform_index(std::uint64_t n) {
        return engine_() % n;
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform_index(
                        static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double normal(double mean, double stddev) {
        return mean + stddev * normal();
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace detail

// Stable 64-bit hash (FNV-1a + splitmix finalizer). Used to derive
// per-segment and per-stage seeds from a master seed so that parallel or
// reordered generation stays reproducible.
inline std::uint64_t stable_hash(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 14695981039346656037ULL ^ seed;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return detail::splitmix64(h);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stage,
                                 std::string_view item = {}) {
    std::uint64_t h = stable_hash(master, stage);
    if (!item.empty()) h = stable_hash(h, item);
    return h;
}

} // namespace ecgdn

#endif
