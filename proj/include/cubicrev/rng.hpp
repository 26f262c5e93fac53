// Seeded RNG with platform-stable value derivation (raw mt19937_64 output only).
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace cubicrev {

class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1), 53-bit mantissa.
    double u01() { return double(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = std::uint64_t(hi - lo) + 1;
        return lo + std::int64_t(eng_() % span);
    }

    /// Uniform direction on the unit sphere.
    std::array<double, 3> unit_vector() {
        double phi = 2.0 * M_PI * u01();
        double cz = 2.0 * u01() - 1.0;
        double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
        return {sz * std::cos(phi), sz * std::sin(phi), cz};
    }

private:
    std::mt19937_64 eng_;
};

/// Stable per-trial seed derivation (splitmix64 of seed ^ index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (index * 0x9e3779b97f4a7c15ULL);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace cubicrev
