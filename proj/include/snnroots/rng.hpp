#pragma once

// SplitMix64: the fixed experiment generator.  Defined by its recurrence
// so every implementation agrees byte-for-byte given the seed:
//   state += 0x9E3779B97F4A7C15
//   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
//   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31; output z
// Draws in {0..m} are next() % (m+1).

#include <cstdint>

namespace snn {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform integer in {0, ..., bound} (modulo draw, part of the spec
    // of the experiment format)
    std::uint64_t next_below(std::uint64_t bound) { return next() % (bound + 1); }

    // uniform in [0, 1) with 53 random bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace snn
