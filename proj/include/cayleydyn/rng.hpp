#pragma once

#include <cstdint>

namespace cayleydyn {

/// SplitMix64 step. Stateless helper shared by the generators below.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic 64-bit generator with explicit stream splitting.
///
/// Streams are addressed by (seed, stream ids...): `Rng(seed).split(a).split(b)`
/// yields the same sequence on every platform, so any sample in a run is
/// reproducible from the run seed plus its index path.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(mix(seed, 0x5851f42d4c957f2dull)) {}

    Rng split(uint64_t stream) const { return Rng(mix(state_, stream), 0); }

    uint64_t next() { return splitmix64(state_); }

    /// Unbiased draw from [0, bound) by rejection; bound >= 1.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = -bound % bound;  // 2^64 mod bound
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    Rng(uint64_t raw, int) : state_(raw) {}

    static uint64_t mix(uint64_t a, uint64_t b) {
        uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
        splitmix64(s);
        splitmix64(s);
        return s;
    }

    uint64_t state_;
};

}  // namespace cayleydyn
