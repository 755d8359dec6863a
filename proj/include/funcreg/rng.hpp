#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace funcreg {

// SplitMix64 finalizer. Good avalanche, used to hash seed components.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Counter-based seed derivation: the per-replicate stream depends only on
// (master_seed, n, replicate), never on execution order or thread count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n, std::uint64_t replicate) {
    std::uint64_t h = mix64(master + 0x9E3779B97F4A7C15ULL);
    h = mix64(h ^ (n * 0xBF58476D1CE4E5B9ULL + 0x9E3779B97F4A7C15ULL));
    h = mix64(h ^ (replicate * 0x94D049BB133111EBULL + 0x9E3779B97F4A7C15ULL));
    return h;
}

// Deterministic generator. mt19937_64 output is fully specified by the
// standard; the mappings to doubles below are ours, so streams are
// reproducible bit-for-bit for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0,1), 53-bit resolution.
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1); never returns 0, safe under log().
    double u01_open() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    // Standard normal via Box-Muller. Draws two uniforms per call; no state
    // is cached across calls so the draw sequence stays position-independent.
    double normal() {
        const double u1 = u01_open();
        const double u2 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // +1 or -1 with equal probability.
    double sign() { return (engine_() >> 63) ? 1.0 : -1.0; }

private:
    std::mt19937_64 engine_;
};

} // namespace funcreg
