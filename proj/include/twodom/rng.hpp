#pragma once

#include <cstdint>

namespace twodom {

/// Counter-based deterministic generator (splitmix64 of seed + counter).
/// Every draw is a pure function of (seed, counter); no platform randomness.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() { return at(seed_, counter_++); }

    /// Draw uniformly from [0, bound) for bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
        std::uint64_t z = seed + counter * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace twodom
