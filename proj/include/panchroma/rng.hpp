#pragma once

#include <cstdint>
#include <random>

namespace panchroma {

// SplitMix64 output function. Used both as a seed scrambler and as the
// per-trial seed derivation (see trial_seed below).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-trial seed contract: trial k of a run with master seed m uses
// mix64(m + k * GOLDEN), i.e. the k-th output of a SplitMix64 stream
// seeded at m. Trials are therefore independent of execution order and
// reproducible across machines running the same build.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_index) {
    return mix64(master + trial_index * 0x9e3779b97f4a7c15ULL);
}

// mt19937_64 with platform-stable helpers. The standard pins the raw
// engine sequence; std::uniform_*_distribution does not, so we roll the
// two distributions we need.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform double in [0, 1), 53 random bits
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, bound), bound >= 1, by rejection
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace panchroma
