#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace iann {

/// Deterministic uniform RNG with a fixed draw discipline.
///
/// std::mt19937_64 produces an identical bit stream everywhere, but the
/// standard <random> distributions do not, so the mappings below are
/// hand-rolled. Every seeded run reproduces bit-for-bit on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0,1), 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer on the inclusive range [lo, hi]. Unbiased via rejection.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t range = hi - lo + 1;
        if (range == 0) return engine_();  // full 64-bit range
        const std::uint64_t reject_below = (-range) % range;
        std::uint64_t x = engine_();
        while (x < reject_below) x = engine_();
        return lo + x % range;
    }

    /// +1.0 or -1.0 with equal probability.
    double sign() { return uniform_int(0, 1) == 0 ? 1.0 : -1.0; }

    /// In-place Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = uniform_int(0, i - 1);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 step; used to derive well-separated stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Mixes independent seed components into one stream seed so that per-fold
/// and per-run streams never collide.
inline std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ b);
}

inline std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return seed_mix(seed_mix(a, b), c);
}

}  // namespace iann
