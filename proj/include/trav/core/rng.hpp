#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace trav::core {

inline constexpr std::uint64_t kMixGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Stateless key mixing, used to derive independent sub-streams and
// counter-based draws from a single experiment seed.
inline std::uint64_t mix_keys(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = mix64(seed + kMixGamma);
    h = mix64(h ^ (a + kMixGamma));
    h = mix64(h ^ (b + kMixGamma));
    h = mix64(h ^ (c + kMixGamma));
    return h;
}

inline double u64_to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// SplitMix64 stream. Small, fast, and identical on every platform,
// which keeps experiment reports byte-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng derive(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t sub = 0) {
        return Rng(mix_keys(seed, stream, sub));
    }

    std::uint64_t next_u64() {
        state_ += kMixGamma;
        return mix64(state_);
    }

    // [0, 1)
    double uniform() { return u64_to_unit(next_u64()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, n); n must be > 0
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    // Standard normal via Box-Muller, one spare cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// One standard normal from a (seed, k0, k1) counter. Order-free, so
// per-pixel noise can be generated by any thread layout.
inline double counter_normal(std::uint64_t seed, std::uint64_t k0,
                             std::uint64_t k1) {
    double u1 = u64_to_unit(mix_keys(seed, k0, k1, 0));
    double u2 = u64_to_unit(mix_keys(seed, k0, k1, 1));
    double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace trav::core
