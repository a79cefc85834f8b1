#pragma once

#include <cstdint>

namespace graphon {

/// Deterministic 64-bit generator (xorshift-multiply finalized splitmix
/// state). std::uniform_real_distribution is implementation-defined, so all
/// sampling goes through these helpers to keep seeded runs bit-identical
/// across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream derived from (seed, stream index).
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed);
        mix.next();
        mix.state_ ^= 0x9e3779b97f4a7c15ULL * (index + 1);
        mix.next();
        return mix;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

}  // namespace graphon
