#pragma once

#include <cstdint>

namespace reklab {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", 2014). The constants below are the published ones; the output
// sequence for a given seed is identical on every platform, which is what the
// reproducibility contract of the generators and sweeps relies on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound), bound >= 1. Rejection sampling keeps the
    // distribution exactly uniform and the result platform-independent.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t x = next();
        while (x > limit) x = next();
        return x % bound;
    }

    // Derive an independent stream for subtask `index` of a seeded run.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 s(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
        return s.next();
    }

private:
    std::uint64_t state_;
};

} // namespace reklab
