#pragma once

#include <cstdint>

namespace tvlab {

// Seeded deterministic generator (splitmix64). Used everywhere randomness is
// needed so that identical (instance, seed) pairs replay byte-for-byte on any
// platform; std::uniform_int_distribution is implementation-defined and is
// deliberately avoided.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via rejection; bound must be nonzero.
    uint64_t next_below(uint64_t bound) {
        const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform double in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    uint64_t state_;
};

} // namespace tvlab
